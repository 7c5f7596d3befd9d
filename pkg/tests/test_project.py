from json import dumps as json_dumps
from pathlib import Path
from unittest import mock
import os
import shutil
import tempfile

from amcmpy.config import load_config, project_path
from amcmpy.core.encoder import Encoder, SecretsEncoder
from amcmpy.core.exceptions import ConfigError
from amcmpy.core.values import Text, Int, ListValue, RecordValue
from amcmpy.project import Project
from amcmpy.templating.context import ANONYMOUS, PersonalizationContext
from amcmpy.utils.utils_log import configure_logging
import unittest

FIXTURES = Path(__file__).parent / 'fixtures'


def setUpModule():
    configure_logging()


class ProjectTestCase(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.root = Path(self.tmp.name) / 'site'
        shutil.copytree(FIXTURES, self.root)
        self.conf = self.root / 'amcm.conf'

    def tearDown(self):
        self.tmp.cleanup()

    def write_conf(self, text: str) -> None:
        self.conf.write_text(text, encoding='utf-8')


class TestConfig(ProjectTestCase):

    def test_paths_resolve_against_the_project_file(self):
        config = load_config(self.conf)
        self.assertEqual(config.content_root, self.root / 'content')
        self.assertEqual(config.templates, (self.root / 'templates' / 'home.amt', self.root / 'templates' / 'news.amt'))
        self.assertEqual(config.default_context, self.root / 'contexts' / 'anonymous.ctx')
        self.assertTrue(config.output_dir.is_dir())

    def test_missing_key(self):
        self.write_conf('content_root = content\ntemplates = templates/home.amt\n')
        with self.assertRaises(ConfigError) as cm:
            load_config(self.conf)
        self.assertIn('bindings', str(cm.exception))

    def test_missing_path(self):
        self.write_conf('content_root = content\ntemplates = templates/gone.amt\n'
                        'bindings = bindings/home.amp\noutput_dir = out\n')
        with self.assertRaises(ConfigError) as cm:
            load_config(self.conf)
        self.assertIn('gone.amt', str(cm.exception))

    def test_duplicate_key(self):
        self.write_conf('output_dir = a\noutput_dir = b\n')
        with self.assertRaises(ConfigError):
            load_config(self.conf)

    def test_unreadable_file(self):
        with self.assertRaises(ConfigError):
            load_config(self.root / 'missing.conf')

    def test_project_path_precedence(self):
        with mock.patch.dict(os.environ, {'AMCM_PROJECT': 'env.conf'}):
            self.assertEqual(project_path('flag.conf'), Path('flag.conf'))
            self.assertEqual(project_path(), Path('env.conf'))
        with mock.patch.dict(os.environ, {}, clear=True):
            self.assertEqual(project_path(), Path('amcm.conf'))


class TestProject(ProjectTestCase):

    def setUp(self):
        super().setUp()
        self.project = Project.load(self.conf)

    def test_attributes(self):
        self.assertEqual(self.project.name, 'amcm')
        self.assertEqual(self.project.template_names, ['home', 'news'])
        self.assertEqual(len(self.project.paths), 6)
        self.assertEqual(self.project.context, ANONYMOUS)

    def test_jsonify_hides_heavy_attributes(self):
        data = self.project.jsonify()
        self.assertEqual(set(data), {'name', 'paths', 'template_names', 'context_fingerprint'})
        self.assertEqual(data['context_fingerprint'], ANONYMOUS.fingerprint())

    def test_pages_keep_requested_order(self):
        pages = self.project.get_pages(['news', 'home', 'news'])
        self.assertEqual([page.template for page, _ in pages], ['news', 'home', 'news'])
        self.assertTrue(all(lines is None for _, lines in pages))

    def test_page_with_trace(self):
        registered = self.project.get_context(self.root / 'contexts' / 'registered.ctx')
        page, lines = self.project.get_page('home', registered, with_trace=True)
        self.assertIn('<h1>Welcome back</h1>', page.markup)
        self.assertEqual(page.fingerprint, registered.fingerprint())
        self.assertTrue(lines[0].startswith('1 | '))

    def test_write_pages(self):
        written = self.project.write_pages(['news'])
        self.assertEqual(written, [self.root / 'out' / 'news.html'])
        self.assertEqual(written[0].read_text(encoding='utf-8'),
                         (FIXTURES / 'golden' / 'news.anonymous.html').read_text(encoding='utf-8'))

    def test_load_source(self):
        self.assertEqual(self.project.get_load_source(),
                         (FIXTURES / 'golden' / 'load.anonymous.amp').read_text(encoding='utf-8'))

    def test_unknown_template(self):
        with self.assertRaises(ConfigError):
            self.project.get_page('about')


class TestProjectErrors(ProjectTestCase):

    def test_template_name_must_be_a_file_name(self):
        (self.root / 'templates' / 'home.amt').write_text(
            'template "../home" { slot title : Text; skeleton <<<{{title}}>>> }', encoding='utf-8')
        with self.assertRaises(ConfigError):
            Project.load(self.conf)

    def test_binding_for_unknown_template(self):
        (self.root / 'bindings' / 'news.amp').write_text('bind "blog" { x = 1; }', encoding='utf-8')
        with self.assertRaises(ConfigError):
            Project.load(self.conf)

    def test_template_bound_twice(self):
        (self.root / 'bindings' / 'news.amp').write_text('bind "home" { x = 1; }', encoding='utf-8')
        with self.assertRaises(ConfigError):
            Project.load(self.conf)


class TestEncoder(unittest.TestCase):

    def test_values_become_plain_data(self):
        document = {
            'title': Text('Hi'),
            'items': ListValue('Int', (Int(1), Int(2))),
            'owner': RecordValue((('name', Text('Acme')),)),
            'seen': frozenset({'b', 'a'}),
            'where': Path('a') / 'b',
        }
        self.assertEqual(json_dumps(document, cls=Encoder, sort_keys=True),
                         '{"items": [1, 2], "owner": {"name": "Acme"}, "seen": ["a", "b"], '
                         '"title": "Hi", "where": "a/b"}')

    def test_dataclasses_encode_their_fields(self):
        ctx = PersonalizationContext.build('registered')
        self.assertEqual(json_dumps(ctx, cls=Encoder), '{"p": "registered", "s": [], "v": [], "e": []}')

    def test_secrets_are_dropped(self):
        ctx = PersonalizationContext.build('registered')
        self.assertEqual(json_dumps(ctx, cls=SecretsEncoder, secrets=['s', 'v', 'e']), '{"p": "registered"}')

    def test_secrets_must_be_a_list(self):
        with self.assertRaises(TypeError):
            SecretsEncoder(secrets='s')
        with self.assertRaises(ValueError):
            SecretsEncoder(secrets=[])


if __name__ == '__main__':
    unittest.main()
