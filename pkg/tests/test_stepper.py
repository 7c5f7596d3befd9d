from amcmpy.core.exceptions import MachineError, ErrorKind
from amcmpy.core.values import Text, Int
from amcmpy.lang import ast
from amcmpy.lang.parser import parse_source
from amcmpy.machine.state import initial_state
from amcmpy.machine.stepper import Halted, MachineConfig, iterate, load, step, run_small_step
from amcmpy.machine.trace import trace, format_step
from amcmpy.utils.utils_log import configure_logging
import unittest


def setUpModule():
    configure_logging()


class TestStepper(unittest.TestCase):

    def test_empty_control_halts(self):
        cfg = MachineConfig((), initial_state())
        result = step(cfg)
        self.assertIsInstance(result, Halted)
        self.assertEqual(result.state, cfg.state)

    def test_skip_takes_one_step(self):
        cfg = step(load(ast.Skip(), initial_state()))
        self.assertEqual(cfg.rule, 'skip')
        self.assertTrue(cfg.halted)

    def test_assignment_steps(self):
        rules = [cfg.rule for cfg in iterate(parse_source('a = 1;'))]
        self.assertEqual(rules, ['assign', 'lit', 'bind'])

    def test_sequence_and_comparison_steps(self):
        rules = [cfg.rule for cfg in iterate(parse_source('a = 1; emit a == 1;'))]
        self.assertEqual(rules, ['seq', 'assign', 'lit', 'bind', 'emit', 'eq', 'ident', 'lit', 'compare', 'output'])

    def test_branch_steps(self):
        rules = [cfg.rule for cfg in iterate(parse_source('if (true) { emit 1; } else { emit 2; }'))]
        self.assertEqual(rules, ['if', 'lit', 'branch', 'emit', 'lit', 'output'])

    def test_read_step_consumes_input(self):
        configs = list(iterate(parse_source('a = read();'), [Text('x')]))
        read = next(cfg for cfg in configs if cfg.rule == 'read')
        self.assertEqual(read.state.input, ())
        self.assertEqual(read.values, (Text('x'),))

    def test_run_small_step_final_state(self):
        state = run_small_step(parse_source('a = read(); emit a;'), [Int(5)])
        self.assertEqual(state.memory.lookup('a'), Int(5))
        self.assertEqual(state.output, (Int(5),))

    def test_error_from_step(self):
        cfg = load(parse_source('emit x;'), initial_state())
        cfg = step(cfg)
        with self.assertRaises(MachineError) as cm:
            step(cfg)
        self.assertIs(cm.exception.kind, ErrorKind.UNBOUND_IDENTIFIER)


class TestTrace(unittest.TestCase):

    def test_trace_lines(self):
        lines = trace(parse_source('t = "x"; emit t;'))
        self.assertEqual(lines, [
            '1 | seq | mem={} in=0 out=0',
            '2 | assign | mem={} in=0 out=0',
            '3 | lit | mem={} in=0 out=0',
            '4 | bind | mem={t="x"} in=0 out=0',
            '5 | emit | mem={t="x"} in=0 out=0',
            '6 | ident | mem={t="x"} in=0 out=0',
            '7 | output | mem={t="x"} in=0 out=1',
        ])

    def test_memory_is_sorted(self):
        lines = trace(parse_source('b = 2; a = 1;'))
        self.assertTrue(lines[-1].endswith('mem={a=1, b=2} in=0 out=0'))

    def test_format_step(self):
        state = initial_state([Int(1), Int(2)])
        self.assertEqual(format_step(3, 'read', state), '3 | read | mem={} in=2 out=0')

    def test_empty_program_trace(self):
        self.assertEqual(trace(ast.Skip()), ['1 | skip | mem={} in=0 out=0'])


if __name__ == '__main__':
    unittest.main()
