"""
Small-step machine: the work cycle as explicit state transitions.

A configuration holds a control stack (top at the end), a value stack and
the machine state. Each call to ``step`` pops the top frame and performs the
single transition listed for it in ``RULES``.
"""

from dataclasses import dataclass, field, replace

from amcmpy.lang import ast
from amcmpy.machine import semantics
from amcmpy.machine.state import MachineState, initial_state
from amcmpy.templating.context import ANONYMOUS

# -- FRAMES --

@dataclass(frozen=True, slots=True)
class ExecCom:
    com: object

@dataclass(frozen=True, slots=True)
class EvalExp:
    exp: object

@dataclass(frozen=True, slots=True)
class AssignTo:
    node: ast.Assign

@dataclass(frozen=True, slots=True)
class EmitValue:
    node: ast.Emit

@dataclass(frozen=True, slots=True)
class Branch:
    node: ast.If

@dataclass(frozen=True, slots=True)
class Compare:
    node: object


@dataclass(frozen=True, slots=True)
class MachineConfig:
    control: tuple
    state: MachineState
    values: tuple = ()
    rule: str = field(default=None, compare=False)

    @property
    def halted(self) -> bool:
        return not self.control


@dataclass(frozen=True, slots=True)
class Halted:
    state: MachineState


# One rule per AST constructor plus the value-return frames.
RULES = {
    ast.Skip: 'skip',
    ast.Assign: 'assign',
    ast.Seq: 'seq',
    ast.If: 'if',
    ast.Emit: 'emit',
    ast.Lit: 'lit',
    ast.Ident: 'ident',
    ast.Read: 'read',
    ast.ContentRef: 'content',
    ast.Eq: 'eq',
    ast.Neq: 'neq',
    AssignTo: 'bind',
    EmitValue: 'output',
    Branch: 'branch',
    Compare: 'compare',
}


def load(program, state: MachineState) -> MachineConfig:
    return MachineConfig((ExecCom(program),), state)

def step(cfg: MachineConfig, store=None, ctx=ANONYMOUS, slots: dict = None):
    """Perform one transition; an empty control stack yields Halted."""
    if cfg.halted:
        return Halted(cfg.state)
    frame = cfg.control[-1]
    control = cfg.control[:-1]
    values = cfg.values
    s = cfg.state

    if isinstance(frame, ExecCom):
        com = frame.com
        rule = RULES[type(com)]
        if isinstance(com, ast.Assign):
            control += (AssignTo(com), EvalExp(com.expr))
        elif isinstance(com, ast.Seq):
            control += (ExecCom(com.rest), ExecCom(com.first))
        elif isinstance(com, ast.If):
            control += (Branch(com), EvalExp(com.cond))
        elif isinstance(com, ast.Emit):
            control += (EmitValue(com), EvalExp(com.expr))
        elif not isinstance(com, ast.Skip):
            raise TypeError(f"not a command: {com!r}")

    elif isinstance(frame, EvalExp):
        exp = frame.exp
        rule = RULES[type(exp)]
        if isinstance(exp, ast.Lit):
            values += (exp.value,)
        elif isinstance(exp, ast.Ident):
            values += (semantics.lookup_identifier(s, exp.name, exp.pos),)
        elif isinstance(exp, ast.Read):
            value, s = semantics.read_input(s, exp.pos)
            values += (value,)
        elif isinstance(exp, ast.ContentRef):
            values += (semantics.resolve_content(s, exp.path, store, ctx, exp.pos),)
        elif isinstance(exp, (ast.Eq, ast.Neq)):
            control += (Compare(exp), EvalExp(exp.right), EvalExp(exp.left))
        else:
            raise TypeError(f"not an expression: {exp!r}")

    else:
        rule = RULES[type(frame)]
        node = frame.node
        if isinstance(frame, AssignTo):
            *rest, value = values
            values = tuple(rest)
            s = semantics.assign(s, node.name, value, slots, node.pos)
        elif isinstance(frame, EmitValue):
            *rest, value = values
            values = tuple(rest)
            s = s.append_output(value)
        elif isinstance(frame, Branch):
            *rest, value = values
            values = tuple(rest)
            if semantics.branch_condition(s, value, node.pos):
                control += (ExecCom(node.then),)
            elif node.orelse is not None:
                control += (ExecCom(node.orelse),)
        elif isinstance(frame, Compare):
            *rest, left, right = values
            values = tuple(rest)
            values += (semantics.compare_values(s, left, right, isinstance(node, ast.Neq), node.pos),)

    return replace(cfg, control=control, values=values, state=s, rule=rule)

def iterate(program, input=(), store=None, ctx=ANONYMOUS, slots: dict = None):
    """Yield every configuration reached, one per transition, until halt."""
    cfg = load(program, initial_state(input))
    while not cfg.halted:
        cfg = step(cfg, store, ctx, slots)
        yield cfg

def run_small_step(program, input=(), store=None, ctx=ANONYMOUS, slots: dict = None) -> MachineState:
    """Iterate step to Halted and return the final state."""
    cfg = load(program, initial_state(input))
    while True:
        result = step(cfg, store, ctx, slots)
        if isinstance(result, Halted):
            return result.state
        cfg = result
