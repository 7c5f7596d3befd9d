import re
from dataclasses import dataclass

HOLE_PATTERN = re.compile(r'\{\{([A-Za-z_][A-Za-z0-9_]*)\}\}')
ANY_HOLE_PATTERN = re.compile(r'\{\{(?:.*?\}\})?', re.DOTALL)


@dataclass(frozen=True, slots=True)
class Template:
    """Typed slots plus a markup skeleton with ``{{name}}`` holes."""
    name: str
    slots: tuple
    skeleton: str

    def __post_init__(self):
        names = [name for name, _ in self.slots]
        if len(names) != len(set(names)):
            raise ValueError(f"slot names must be distinct in template '{self.name}'")
        missing = set(self.holes()) - set(names)
        if missing:
            raise ValueError(f"holes without slots in template '{self.name}': {sorted(missing)}")
        malformed = malformed_holes(self.skeleton)
        if malformed:
            raise ValueError(f"malformed holes in template '{self.name}': {malformed}")

    @property
    def slot_types(self) -> dict:
        return dict(self.slots)

    def holes(self) -> list:
        return hole_names(self.skeleton)


def hole_names(skeleton: str) -> list:
    """Hole names in order of first appearance."""
    return list(dict.fromkeys(HOLE_PATTERN.findall(skeleton)))

def malformed_holes(skeleton: str) -> list:
    """``{{...}}`` spans, and unclosed ``{{``, that are not a plain ``{{identifier}}`` hole."""
    return [
        match.group(0) for match in ANY_HOLE_PATTERN.finditer(skeleton)
        if not HOLE_PATTERN.fullmatch(match.group(0))
    ]

def has_residual_hole(markup: str) -> bool:
    return ANY_HOLE_PATTERN.search(markup) is not None
