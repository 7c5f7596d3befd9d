"""
Command-line front end::

    amcm [--project FILE] [--verbose] check <model>
    amcm render <template>... [--context f.ctx] [--trace]
    amcm translate <model> [--ddl out.sql] [--load out.amp] [--context f.ctx]
    amcm eval <program.amp> [--input values.ctx] [--context f.ctx] [--json]

Exit codes: 0 ok, 1 usage/IO/configuration, 2 model or integrity failure,
3 machine error.
"""

import argparse
import sys
import time
from json import dumps as json_dumps

import structlog

from amcmpy.config import project_path
from amcmpy.constants.project import (
    EXIT_OK, EXIT_USAGE, EXIT_INTEGRITY, EXIT_MACHINE
)
from amcmpy.core.encoder import Encoder
from amcmpy.core.exceptions import (
    AmcmError,
    ConfigError,
    ContentError,
    IntegrityFailed,
    MachineError,
    ModelError,
    SourceError,
    TranslationError,
)
from amcmpy.lang.parser import parse_literal, parse_program_file
from amcmpy.lang.printer import value_source
from amcmpy.lang.template_parser import parse_context
from amcmpy.machine.evaluator import run
from amcmpy.model.reader import read_model
from amcmpy.project import Project
from amcmpy.templating.context import ANONYMOUS
from amcmpy.translator.ddl import render_ddl, translate_ddl
from amcmpy.translator.integrity import check_integrity
from amcmpy.utils.utils_file import read_text, write_all_atomic
from amcmpy.utils.utils_log import configure_logging
from amcmpy.utils.utils_parser import parse_key_values

logger = structlog.get_logger(__name__)


class UsageError(AmcmError):
    pass


class ArgumentParser(argparse.ArgumentParser):
    """argparse with usage errors raised instead of exiting with status 2."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog='amcm', description="Typed content templating and model compilation.")
    parser.add_argument('--project', help="project file (default: $AMCM_PROJECT or ./amcm.conf)")
    parser.add_argument('--verbose', '-v', action='store_true', help="debug logging and timing lines")
    commands = parser.add_subparsers(dest='command', required=True, parser_class=ArgumentParser)

    check = commands.add_parser('check', help="report completeness, consistency and integrity findings")
    check.add_argument('model')

    render = commands.add_parser('render', help="render templates into the output directory")
    render.add_argument('templates', nargs='+')
    render.add_argument('--context', help="context file (.ctx)")
    render.add_argument('--trace', action='store_true', help="also write the small-step trace")

    translate = commands.add_parser('translate', help="emit relational DDL and/or a load program")
    translate.add_argument('model')
    translate.add_argument('--ddl', help="DDL output file")
    translate.add_argument('--load', help="load program output file")
    translate.add_argument('--context', help="context file (.ctx) for the load program")

    evaluate = commands.add_parser('eval', help="run a program and print its final memory and output")
    evaluate.add_argument('program')
    evaluate.add_argument('--input', help="input values, one 'key = literal' per line")
    evaluate.add_argument('--context', help="context file (.ctx)")
    evaluate.add_argument('--json', action='store_true', help="print JSON instead of text")
    return parser

# -- HELPERS --

def read_context(path):
    return parse_context(read_text(path), str(path)) if path else None

def read_inputs(path) -> tuple:
    """Values of a ``key = <literal>`` file, in file order."""
    if not path:
        return ()
    return tuple(parse_literal(entry.value, str(path)) for entry in parse_key_values(read_text(path), str(path)))

def load_project(args, required: bool = True) -> Project | None:
    path = project_path(args.project)
    if not required and not args.project and not path.exists():
        return None
    return Project.load(path)

def print_error(error) -> None:
    print(f"error: {error}", file=sys.stderr)

# -- COMMANDS --

def cmd_check(args) -> int:
    try:
        model = read_model(args.model, strict=False)
    except OSError as e:
        print_error(f"cannot read '{args.model}': {e.strerror or e}")
        return EXIT_USAGE
    except (SourceError, ModelError) as e:
        print_error(e)
        return EXIT_INTEGRITY
    report = check_integrity(model)
    for line in report.lines():
        print(line)
    return EXIT_OK if report.passed else EXIT_INTEGRITY

def cmd_render(args) -> int:
    project = load_project(args)
    ctx = read_context(args.context)
    written = project.write_pages(args.templates, ctx, args.trace)
    for path in written:
        print(path)
    return EXIT_OK

def cmd_translate(args) -> int:
    try:
        model = read_model(args.model, strict=False)
    except OSError as e:
        print_error(f"cannot read '{args.model}': {e.strerror or e}")
        return EXIT_USAGE
    except (SourceError, ModelError) as e:
        print_error(e)
        return EXIT_INTEGRITY
    try:
        ddl = render_ddl(translate_ddl(model))
    except IntegrityFailed as e:
        for line in e.report.lines():
            print(line, file=sys.stderr)
        print_error(e)
        return EXIT_INTEGRITY

    outputs = {}
    if args.ddl:
        outputs[args.ddl] = ddl
    if args.load:
        project = load_project(args)
        outputs[args.load] = project.get_load_source(read_context(args.context))
    if not outputs:
        sys.stdout.write(ddl)
    for path in write_all_atomic(outputs):
        print(path)
    return EXIT_OK

def cmd_eval(args) -> int:
    program = parse_program_file(read_text(args.program), args.program)
    project = load_project(args, required=False)
    store = project.store if project else None
    ctx = read_context(args.context) or (project.context if project else ANONYMOUS)
    state = run(program, read_inputs(args.input), store, ctx)

    if args.json:
        document = {'memory': state.memory.as_dict(), 'output': list(state.output)}
        print(json_dumps(document, indent=2, sort_keys=True, cls=Encoder))
        return EXIT_OK
    print('memory:')
    for name, value in state.memory.items():
        print(f"  {name} = {value_source(value)}")
    print('output:')
    for value in state.output:
        print(f"  {value_source(value)}")
    return EXIT_OK


COMMANDS = {
    'check': cmd_check,
    'render': cmd_render,
    'translate': cmd_translate,
    'eval': cmd_eval,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print_error(e)
        return EXIT_USAGE
    configure_logging(args.verbose)

    started = time.perf_counter()
    try:
        status = COMMANDS[args.command](args)
    except MachineError as e:
        print_error(e)
        status = EXIT_MACHINE
    except (ModelError, TranslationError) as e:
        print_error(e)
        status = EXIT_INTEGRITY
    except (ConfigError, ContentError, SourceError, UsageError) as e:
        print_error(e)
        status = EXIT_USAGE
    except OSError as e:
        print_error(f"{e.filename or 'I/O'}: {e.strerror or e}")
        status = EXIT_USAGE
    if args.verbose:
        print(f"{args.command} took {time.perf_counter() - started:.3f}s", file=sys.stderr)
    logger.debug("command_finished", command=args.command, status=status)
    return status


if __name__ == '__main__':
    sys.exit(main())
