if __loader__.name == '__main__':
    import sys
    sys.path.append(sys.path[0] + '/..')

from concurrent.futures import ThreadPoolExecutor
from json import (
  dumps as json_dumps,
  loads as json_loads
)

import structlog

from amcmpy.config import ProjectConfig, load_config
from amcmpy.constants.project import PAGE_EXT, TRACE_EXT
from amcmpy.core.encoder import SecretsEncoder
from amcmpy.core.exceptions import ConfigError
from amcmpy.lang.parser import parse_binding
from amcmpy.lang.template_parser import parse_context, parse_template
from amcmpy.machine.trace import trace
from amcmpy.templating.binding import bind_template
from amcmpy.templating.content import load_store
from amcmpy.templating.context import ANONYMOUS
from amcmpy.templating.render import render
from amcmpy.translator.load_program import emit_load_source
from amcmpy.utils.utils_file import read_text, write_all_atomic
from amcmpy.utils.utils_validators import is_path_segment

logger = structlog.get_logger(__name__)


class Project:
    """One configured project: content store, templates and their binding programs."""

    def __init__(self, config: ProjectConfig) -> None:
        self.config = config
        self.store = load_store(config.content_root)
        self.templates = self.get_templates()
        self.bindings = self.get_bindings()
        self.context = self.get_context()

        self.name = config.path.stem
        self.paths = self.store.paths()
        self.template_names = list(self.templates)
        self.context_fingerprint = self.context.fingerprint()

    @classmethod
    def load(cls, path) -> 'Project':
        return cls(load_config(path))

    def __str__(self) -> str:
        return json_dumps(self, indent=2, cls=SecretsEncoder,
                          secrets=['config', 'store', 'templates', 'bindings', 'context'])

    def jsonify(self) -> dict:
        return json_loads(self.__str__())

    def get_templates(self) -> dict:
        templates = {}
        for path in self.config.templates:
            template = parse_template(read_text(path), str(path))
            if not is_path_segment(template.name):
                raise ConfigError(f"{path}: template name '{template.name}' cannot name an output file")
            if template.name in templates:
                raise ConfigError(f"template '{template.name}' is defined twice ({path})")
            templates[template.name] = template
        return templates

    def get_bindings(self) -> dict:
        bindings = {}
        for path in self.config.bindings:
            binding = parse_binding(read_text(path), str(path))
            if binding.template in bindings:
                raise ConfigError(f"template '{binding.template}' is bound twice ({path})")
            if binding.template not in self.templates:
                raise ConfigError(f"{path}: binds unknown template '{binding.template}'")
            bindings[binding.template] = binding.program
        return bindings

    def get_context(self, path=None):
        """The context file at path, the configured default, or the anonymous context."""
        path = path or self.config.default_context
        if path is None:
            return ANONYMOUS
        return parse_context(read_text(path), str(path))

    def get_template(self, name: str):
        if name not in self.templates:
            raise ConfigError(f"unknown template '{name}'; known: {', '.join(self.templates) or 'none'}")
        return self.templates[name]

    def get_program(self, name: str):
        if name not in self.bindings:
            raise ConfigError(f"template '{name}' has no binding program")
        return self.bindings[name]

    def get_page(self, name: str, ctx=None, with_trace: bool = False) -> tuple:
        """(Page, trace lines or None) for one template."""
        ctx = ctx or self.context
        template = self.get_template(name)
        program = self.get_program(name)
        memory = bind_template(template, program, self.store, ctx)
        page = render(template, memory, ctx)
        lines = trace(program, (), self.store, ctx, template.slot_types) if with_trace else None
        return page, lines

    def get_pages(self, names: list, ctx=None, with_trace: bool = False) -> list:
        """Render several templates concurrently; results keep the order of names."""
        ctx = ctx or self.context
        with ThreadPoolExecutor() as pool:
            return list(pool.map(lambda name: self.get_page(name, ctx, with_trace), names))

    def get_load_source(self, ctx=None) -> str:
        return emit_load_source(self.store, ctx or self.context)

    def write_pages(self, names: list, ctx=None, with_trace: bool = False) -> list:
        """Render everything first, then write; a failure leaves the output directory untouched."""
        outputs = {}
        for name, (page, lines) in zip(names, self.get_pages(names, ctx, with_trace)):
            outputs[self.config.output_dir / f"{name}{PAGE_EXT}"] = page.markup
            if lines is not None:
                outputs[self.config.output_dir / f"{name}{TRACE_EXT}"] = ''.join(line + '\n' for line in lines)
        written = write_all_atomic(outputs)
        logger.debug("pages_written", templates=names, files=len(written))
        return written


if __name__ == '__main__':
    print(Project.load(sys.argv[1] if len(sys.argv) > 1 else 'amcm.conf'))
