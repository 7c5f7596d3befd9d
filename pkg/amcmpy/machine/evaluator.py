"""
Denotational evaluator.

    E : Exp -> [State -> [[Value x State] + {error}]]
    C : Com -> [State -> [State + {error}]]

The {error} summand is a raised MachineError.
"""

import structlog

from amcmpy.lang import ast
from amcmpy.machine import semantics
from amcmpy.machine.semantics import bind_value
from amcmpy.machine.state import MachineState, initial_state
from amcmpy.templating.context import ANONYMOUS

logger = structlog.get_logger(__name__)

__all__ = ['eval_expr', 'exec_com', 'bind_value', 'run']


def eval_expr(e, s: MachineState, store=None, ctx=ANONYMOUS) -> tuple:
    """Evaluate an expression to a (value, state) pair."""
    if isinstance(e, ast.Lit):
        return e.value, s
    if isinstance(e, ast.Ident):
        return semantics.lookup_identifier(s, e.name, e.pos), s
    if isinstance(e, ast.Read):
        return semantics.read_input(s, e.pos)
    if isinstance(e, ast.ContentRef):
        return semantics.resolve_content(s, e.path, store, ctx, e.pos), s
    if isinstance(e, (ast.Eq, ast.Neq)):
        left, s = eval_expr(e.left, s, store, ctx)
        right, s = eval_expr(e.right, s, store, ctx)
        return semantics.compare_values(s, left, right, isinstance(e, ast.Neq), e.pos), s
    raise TypeError(f"not an expression: {e!r}")

def exec_com(c, s: MachineState, store=None, ctx=ANONYMOUS, slots: dict = None) -> MachineState:
    """Execute a command, returning the new state."""
    if isinstance(c, ast.Skip):
        return s
    if isinstance(c, ast.Assign):
        value, s = eval_expr(c.expr, s, store, ctx)
        return semantics.assign(s, c.name, value, slots, c.pos)
    if isinstance(c, ast.Seq):
        s = exec_com(c.first, s, store, ctx, slots)
        return exec_com(c.rest, s, store, ctx, slots)
    if isinstance(c, ast.If):
        value, s = eval_expr(c.cond, s, store, ctx)
        if semantics.branch_condition(s, value, c.pos):
            return exec_com(c.then, s, store, ctx, slots)
        if c.orelse is not None:
            return exec_com(c.orelse, s, store, ctx, slots)
        return s
    if isinstance(c, ast.Emit):
        value, s = eval_expr(c.expr, s, store, ctx)
        return s.append_output(value)
    raise TypeError(f"not a command: {c!r}")

def run(program, input=(), store=None, ctx=ANONYMOUS, slots: dict = None) -> MachineState:
    """Run a whole program from empty memory and empty output."""
    state = exec_com(program, initial_state(input), store, ctx, slots)
    logger.debug("program_finished", bound=len(state.memory), output=len(state.output))
    return state
