from dataclasses import dataclass

from amcmpy.core.exceptions import MachineError, ErrorKind
from amcmpy.core.values import text_form
from amcmpy.machine.state import Memory, UNBOUND
from amcmpy.templating.context import ANONYMOUS
from amcmpy.templating.template import Template, HOLE_PATTERN, ANY_HOLE_PATTERN, has_residual_hole


@dataclass(frozen=True, slots=True)
class Page:
    markup: str
    template: str
    fingerprint: str


def render(t: Template, m: Memory, ctx=ANONYMOUS) -> Page:
    """
    Replace every ``{{name}}`` hole with the textual form of m(name).

    Every slot must be bound, including slots with no hole: a page has no
    unfilled elements. A value whose text would leave hole syntax in the
    page is a TypeIncompatibility for its slot.
    """
    for name, _ in t.slots:
        if m.lookup(name) is UNBOUND:
            raise MachineError(ErrorKind.UNBOUND_IDENTIFIER, name)
    for name in t.holes():
        if has_residual_hole(text_form(m.lookup(name))):
            raise MachineError(ErrorKind.TYPE_INCOMPATIBILITY, name)
    markup = HOLE_PATTERN.sub(lambda hole: text_form(m.lookup(hole.group(1))), t.skeleton)
    residue = ANY_HOLE_PATTERN.search(markup)
    if residue:
        # braces split across a value and the skeleton
        raise MachineError(ErrorKind.TYPE_INCOMPATIBILITY, residue.group(0))
    return Page(markup, t.name, ctx.fingerprint())
