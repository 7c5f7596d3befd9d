import structlog

from amcmpy.machine.evaluator import run
from amcmpy.machine.state import Memory
from amcmpy.templating.context import ANONYMOUS
from amcmpy.templating.template import Template

logger = structlog.get_logger(__name__)


def bind_template(t: Template, program, store=None, ctx=ANONYMOUS) -> Memory:
    """
    Run a binding program against a template with empty input.

    Assignments to slot names are type-checked against the slot's declared
    type; any other identifier is a scratch variable, kept in memory but
    ignored at render time.
    """
    state = run(program, (), store, ctx, slots=t.slot_types)
    logger.debug("template_bound", template=t.name, bound=state.memory.names())
    return state.memory
