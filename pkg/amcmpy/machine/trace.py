from amcmpy.lang.printer import value_source
from amcmpy.machine.state import MachineState
from amcmpy.machine.stepper import iterate
from amcmpy.templating.context import ANONYMOUS


def format_memory(state: MachineState) -> str:
    return '{' + ', '.join(f"{name}={value_source(value)}" for name, value in state.memory.items()) + '}'

def format_step(n: int, rule: str, state: MachineState) -> str:
    """``<n> | <rule-name> | mem={...} in=<len> out=<len>``"""
    return f"{n} | {rule} | mem={format_memory(state)} in={len(state.input)} out={len(state.output)}"

def trace(program, input=(), store=None, ctx=ANONYMOUS, slots: dict = None) -> list:
    """Trace lines for a full small-step run; machine errors propagate."""
    return [
        format_step(n, cfg.rule, cfg.state)
        for n, cfg in enumerate(iterate(program, input, store, ctx, slots), start=1)
    ]
