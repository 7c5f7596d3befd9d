from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st

from amcmpy.core.exceptions import (
    DuplicateName, DuplicateId, UnknownDomain, UnknownConcept, UnknownIndividual,
    UnknownReference, TypeMismatch, LevelMismatch, StratificationError, StateMismatch,
    NotAMember, NotFound, NotUnique
)
from amcmpy.core.values import Text, Int, Markup
from amcmpy.model import formula as fm
from amcmpy.model import operations as ops
from amcmpy.model.types import Concept, Individual, StateId
from amcmpy.utils.utils_log import configure_logging
import unittest


def setUpModule():
    configure_logging()


# six people; 'role.kind' and 'age.band' are each missing for some of them
PEOPLE = {
    'p1': {('role', 'kind'): Text('staff'), ('age', 'band'): Int(1)},
    'p2': {('role', 'kind'): Text('staff'), ('age', 'band'): Int(2)},
    'p3': {('role', 'kind'): Text('guest'), ('age', 'band'): Int(1)},
    'p4': {('role', 'kind'): Text('guest')},
    'p5': {('age', 'band'): Int(2)},
    'p6': {},
}
IDS = sorted(PEOPLE)


def subset_state(mask: int) -> StateId:
    return StateId(f"m{mask:02d}")

def subset_members(mask: int) -> set:
    return {ident for bit, ident in enumerate(IDS) if mask & (1 << bit)}

def people_model():
    """One state per subset of the six people."""
    model = ops.declare_domain(ops.empty_model(), 'people')
    model = ops.define_concept(model, Concept('role', 'people', 'Text', ('kind',)))
    model = ops.define_concept(model, Concept('age', 'people', 'Int', ('band',)))
    for ident in IDS:
        model = ops.add_individual(model, 'people', Individual.build(ident, PEOPLE[ident]))
    for mask in range(2 ** len(IDS)):
        model = ops.set_state_membership(model, 'people', subset_state(mask), subset_members(mask))
    return model

def attr(ident, concept, function):
    return PEOPLE[ident].get((concept, function))

# (formula, predicate over an id) pairs; the predicate reads PEOPLE directly
ATOMS = [
    (fm.TRUE, lambda i: True),
    (fm.FALSE, lambda i: False),
    (fm.AttrEq('role', 'kind', Text('staff')), lambda i: attr(i, 'role', 'kind') == Text('staff')),
    (fm.AttrEq('role', 'kind', Text('guest')), lambda i: attr(i, 'role', 'kind') == Text('guest')),
    (fm.AttrNeq('role', 'kind', Text('staff')), lambda i: attr(i, 'role', 'kind') != Text('staff')),
    (fm.AttrEq('age', 'band', Int(1)), lambda i: attr(i, 'age', 'band') == Int(1)),
    (fm.AttrNeq('age', 'band', Int(1)), lambda i: attr(i, 'age', 'band') != Int(1)),
]

def combine(pairs, others):
    for (f, p), (g, q) in product(pairs, others):
        yield fm.And(f, g), (lambda i, p=p, q=q: p(i) and q(i))
        yield fm.Or(f, g), (lambda i, p=p, q=q: p(i) or q(i))

def negate(pairs):
    for f, p in pairs:
        yield fm.Not(f), (lambda i, p=p: not p(i))

def formulas_up_to_depth_one() -> list:
    return ATOMS + list(combine(ATOMS, ATOMS)) + list(negate(ATOMS))

def formulas_at_depth_two() -> list:
    shallow = formulas_up_to_depth_one()
    deep = shallow[len(ATOMS):]
    pairs = list(combine(deep, shallow)) + list(combine(ATOMS, deep)) + list(negate(deep))
    return pairs

def formula_pairs(depth):
    if depth == 0:
        return st.sampled_from(ATOMS)
    inner = formula_pairs(depth - 1)
    return st.one_of(
        inner,
        st.tuples(inner, inner).map(lambda fg: (fm.And(fg[0][0], fg[1][0]), lambda i, a=fg[0][1], b=fg[1][1]: a(i) and b(i))),
        st.tuples(inner, inner).map(lambda fg: (fm.Or(fg[0][0], fg[1][0]), lambda i, a=fg[0][1], b=fg[1][1]: a(i) or b(i))),
        inner.map(lambda fp: (fm.Not(fp[0]), lambda i, a=fp[1]: not a(i))),
    )


class TestDeclarations(unittest.TestCase):

    def setUp(self):
        model = ops.declare_domain(ops.empty_model(), 'pages')
        self.model = ops.define_concept(model, Concept('title', 'pages', 'Text', ('value', 'short')))

    def test_operations_do_not_mutate(self):
        before = self.model
        after = ops.declare_domain(before, 'people')
        self.assertNotIn('people', before.domains)
        self.assertIn('people', after.domains)

    def test_duplicate_domain(self):
        with self.assertRaises(DuplicateName):
            ops.declare_domain(self.model, 'pages')

    def test_duplicate_state(self):
        model = ops.declare_state(self.model, 's0')
        with self.assertRaises(DuplicateName):
            ops.declare_state(model, 's0')

    def test_concept_needs_known_domain(self):
        with self.assertRaises(UnknownDomain):
            ops.define_concept(self.model, Concept('name', 'people', 'Text', ('full',)))

    def test_concept_value_type_must_be_scalar(self):
        with self.assertRaises(TypeMismatch):
            ops.define_concept(self.model, Concept('tags', 'pages', 'List<Text>', ('all',)))

    def test_concept_repeating_a_function(self):
        with self.assertRaises(ValueError):
            Concept('title', 'pages', 'Text', ('value', 'value'))

    def test_add_individual(self):
        model = ops.add_individual(self.model, 'pages', Individual.build('home', {('title', 'value'): Text('Home')}))
        home = model.individuals['home']
        self.assertEqual(home.domain, 'pages')
        self.assertEqual(home.attribute('title', 'value'), Text('Home'))
        self.assertIsNone(home.attribute('title', 'short'))

    def test_individual_attribute_type(self):
        with self.assertRaises(TypeMismatch):
            ops.add_individual(self.model, 'pages', Individual.build('home', {('title', 'value'): Int(1)}))

    def test_individual_unknown_concept_or_function(self):
        with self.assertRaises(UnknownConcept):
            ops.add_individual(self.model, 'pages', Individual.build('home', {('rank', 'value'): Int(1)}))
        with self.assertRaises(UnknownConcept):
            ops.add_individual(self.model, 'pages', Individual.build('home', {('title', 'long'): Text('x')}))

    def test_individual_concept_over_other_domain(self):
        model = ops.declare_domain(self.model, 'people')
        with self.assertRaises(UnknownConcept):
            ops.add_individual(model, 'people', Individual.build('ann', {('title', 'value'): Text('x')}))

    def test_ids_are_global(self):
        model = ops.declare_domain(self.model, 'people')
        model = ops.add_individual(model, 'pages', Individual.build('x'))
        with self.assertRaises(DuplicateId):
            ops.add_individual(model, 'people', Individual.build('x'))

    def test_membership_needs_individuals_of_the_domain(self):
        with self.assertRaises(UnknownIndividual):
            ops.set_state_membership(self.model, 'pages', 's0', {'ghost'})

    def test_membership_declares_the_state(self):
        model = ops.add_individual(self.model, 'pages', Individual.build('home'))
        model = ops.set_state_membership(model, 'pages', 's0', {'home'})
        self.assertEqual(model.states, (StateId('s0'),))
        self.assertEqual(model.members('pages', StateId('s0')), frozenset({'home'}))

    def test_make_data_object(self):
        model = ops.add_individual(self.model, 'pages', Individual.build('home'))
        model = ops.add_individual(model, 'pages', Individual.build('news'))
        model = ops.set_state_membership(model, 'pages', 's0', {'home'})
        data = ops.make_data_object(model, 'title', 'home', 's0')
        self.assertEqual(data.concept.name, 'title')
        self.assertEqual(data.individual.id, 'home')
        self.assertEqual(data.state, StateId('s0'))
        with self.assertRaises(NotAMember):
            ops.make_data_object(model, 'title', 'news', 's0')
        with self.assertRaises(UnknownConcept):
            ops.make_data_object(model, 'rank', 'home', 's0')


class TestComprehension(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.model = people_model()

    def assertComprehends(self, f, predicate, mask):
        members = subset_members(mask)
        obj = ops.comprehend(self.model, 'people', f, subset_state(mask), 'o')
        self.assertEqual(obj.extension, frozenset(i for i in members if predicate(i)), msg=repr(f))
        self.assertEqual(obj.level, 1)

    def test_shallow_formulas_over_every_membership(self):
        for f, predicate in formulas_up_to_depth_one():
            for mask in range(2 ** len(IDS)):
                self.assertComprehends(f, predicate, mask)

    def test_depth_two_formulas_over_full_membership(self):
        pairs = formulas_at_depth_two()
        self.assertGreater(len(pairs), 20000)
        full = 2 ** len(IDS) - 1
        for f, predicate in pairs:
            self.assertComprehends(f, predicate, full)

    @settings(max_examples=500, deadline=None)
    @given(formula_pairs(3), st.integers(0, 2 ** len(IDS) - 1))
    def test_deeper_formulas(self, pair, mask):
        self.assertComprehends(pair[0], pair[1], mask)

    def assertIndividualizes(self, f, predicate, mask):
        satisfiers = sorted(i for i in subset_members(mask) if predicate(i))
        state = subset_state(mask)
        if len(satisfiers) == 1:
            self.assertEqual(ops.individualize(self.model, 'people', f, state), satisfiers[0], msg=repr(f))
        elif not satisfiers:
            with self.assertRaises(NotFound) as cm:
                ops.individualize(self.model, 'people', f, state)
            self.assertEqual(cm.exception.count, 0)
        else:
            with self.assertRaises(NotUnique) as cm:
                ops.individualize(self.model, 'people', f, state)
            self.assertEqual(cm.exception.count, len(satisfiers))

    def test_individualize_matches_oracle(self):
        for f, predicate in formulas_up_to_depth_one():
            for mask in range(2 ** len(IDS)):
                self.assertIndividualizes(f, predicate, mask)

    def test_individualize_depth_two(self):
        full = 2 ** len(IDS) - 1
        by_truth_table = {}
        for f, predicate in formulas_at_depth_two():
            self.assertIndividualizes(f, predicate, full)
            by_truth_table.setdefault(tuple(predicate(i) for i in IDS), (f, predicate))
        for f, predicate in by_truth_table.values():
            for mask in range(2 ** len(IDS)):
                self.assertIndividualizes(f, predicate, mask)

    @settings(max_examples=500, deadline=None)
    @given(formula_pairs(3), st.integers(0, 2 ** len(IDS) - 1))
    def test_individualize_deeper_formulas(self, pair, mask):
        self.assertIndividualizes(pair[0], pair[1], mask)

    def test_closed_world_attributes(self):
        full = subset_state(2 ** len(IDS) - 1)
        neq = ops.comprehend(self.model, 'people', fm.AttrNeq('role', 'kind', Text('staff')), full, 'o')
        self.assertEqual(neq.extension, frozenset({'p3', 'p4', 'p5', 'p6'}))

    def test_unknown_references(self):
        full = subset_state(2 ** len(IDS) - 1)
        with self.assertRaises(UnknownReference):
            ops.comprehend(self.model, 'people', fm.AttrEq('shoe', 'size', Int(1)), full, 'o')
        with self.assertRaises(UnknownReference):
            ops.comprehend(self.model, 'people', fm.AttrEq('role', 'size', Int(1)), full, 'o')
        with self.assertRaises(UnknownReference):
            ops.comprehend(self.model, 'people', fm.InObject('ghosts'), full, 'o')
        with self.assertRaises(UnknownReference):
            ops.comprehend(self.model, 'people', fm.TRUE, StateId('never'), 'o')
        with self.assertRaises(UnknownReference):
            ops.comprehend(self.model, 'planets', fm.TRUE, full, 'o')

    def test_contradiction_is_false_everywhere(self):
        full = subset_state(2 ** len(IDS) - 1)
        for f, _ in formulas_up_to_depth_one():
            for ident in IDS:
                self.assertFalse(fm.eval_formula(self.model, fm.And(f, fm.Not(f)), ident, full))

    def test_other_states_do_not_leak(self):
        state = subset_state(0b000111)
        f = fm.AttrEq('role', 'kind', Text('staff'))
        before = ops.comprehend(self.model, 'people', f, state, 'o')
        changed = ops.set_state_membership(self.model, 'people', subset_state(0b111000), set())
        self.assertEqual(ops.comprehend(changed, 'people', f, state, 'o'), before)

    def test_depth(self):
        self.assertEqual(fm.depth(fm.Not(fm.And(fm.TRUE, fm.FALSE))), 2)


class TestMetalevels(unittest.TestCase):

    def setUp(self):
        model = ops.declare_domain(ops.empty_model(), 'pages')
        model = ops.define_concept(model, Concept('kind', 'pages', 'Text', ('value',)))
        for ident, kind in (('a', 'news'), ('b', 'news'), ('c', 'blog'), ('d', 'blog')):
            model = ops.add_individual(model, 'pages', Individual.build(ident, {('kind', 'value'): Text(kind)}))
        model = ops.set_state_membership(model, 'pages', 's0', {'a', 'b', 'c', 'd'})
        model = ops.set_state_membership(model, 'pages', 's1', {'a'})
        model, self.all = ops.define_object(model, 'pages', fm.TRUE, 's0', 'all')
        model, self.news = ops.define_object(model, 'pages', fm.AttrEq('kind', 'value', Text('news')), 's0', 'news')
        self.model = model

    def test_level_two_ranges_over_all_subsets(self):
        model, groups = ops.define_object(self.model, 'all', fm.TRUE, 's0', 'groups')
        self.assertEqual(groups.level, 2)
        self.assertEqual(len(groups.extension), 16)
        self.assertIn(frozenset(), groups.extension)
        self.assertIn(frozenset({'a', 'b', 'c', 'd'}), groups.extension)

    def test_atoms_lift_to_every_member(self):
        _, groups = ops.define_object(self.model, 'all', fm.InObject('news'), 's0', 'groups')
        self.assertEqual(groups.extension, frozenset(ops.powerset({'a', 'b'})))
        _, mixed = ops.define_object(self.model, 'all', fm.AttrEq('kind', 'value', Text('blog')), 's0', 'blogs')
        self.assertEqual(mixed.extension, frozenset(ops.powerset({'c', 'd'})))

    def test_member_law(self):
        _, groups = ops.define_object(self.model, 'all', fm.InObject('news'), 's0', 'groups')
        for subset in ops.powerset({'a', 'b', 'c', 'd'}):
            self.assertEqual(ops.member(groups, subset), subset <= {'a', 'b'})
        self.assertTrue(ops.member(self.news, 'a'))
        self.assertFalse(ops.member(self.news, 'c'))

    def test_member_level_mismatch(self):
        _, groups = ops.define_object(self.model, 'all', fm.TRUE, 's0', 'groups')
        with self.assertRaises(LevelMismatch):
            ops.member(groups, 'a')
        with self.assertRaises(LevelMismatch):
            ops.member(self.news, frozenset({'a'}))
        with self.assertRaises(LevelMismatch):
            ops.member(self.news, frozenset())

    def test_level_three(self):
        model, _ = ops.define_object(self.model, 'news', fm.TRUE, 's0', 'pairs')
        _, families = ops.define_object(model, 'pairs', fm.TRUE, 's0', 'families')
        self.assertEqual(families.level, 3)
        self.assertEqual(len(families.extension), 16)
        self.assertTrue(ops.member(families, frozenset({frozenset({'a'}), frozenset()})))

    def test_same_level_reference_is_rejected(self):
        with self.assertRaises(StratificationError):
            ops.comprehend(self.model, 'pages', fm.InObject('news'), 's0', 'again')
        model, _ = ops.define_object(self.model, 'all', fm.TRUE, 's0', 'groups')
        with self.assertRaises(StratificationError):
            ops.comprehend(model, 'all', fm.InObject('groups'), 's0', 'again')

    def test_unstratified_comprehension_evaluates(self):
        obj = ops.comprehend(self.model, 'pages', fm.Not(fm.InObject('news')), 's0', 'rest', stratified=False)
        self.assertEqual(obj.extension, frozenset({'c', 'd'}))

    def test_state_mismatch(self):
        with self.assertRaises(StateMismatch):
            ops.comprehend(self.model, 'all', fm.TRUE, 's1', 'groups')
        model, _ = ops.define_object(self.model, 'all', fm.TRUE, 's0', 'groups')
        with self.assertRaises(StateMismatch):
            fm.eval_formula(model, fm.InObject('news'), frozenset({'a'}), StateId('s1'))

    def test_powerset_base_is_capped(self):
        model = ops.declare_domain(ops.empty_model(), 'n')
        idents = [f"i{k:02d}" for k in range(17)]
        for ident in idents:
            model = ops.add_individual(model, 'n', Individual.build(ident))
        model = ops.set_state_membership(model, 'n', 's0', idents)
        model, _ = ops.define_object(model, 'n', fm.TRUE, 's0', 'big')
        with self.assertRaises(LevelMismatch):
            ops.comprehend(model, 'big', fm.TRUE, 's0', 'sets')

    def test_duplicate_object_name(self):
        with self.assertRaises(DuplicateName):
            ops.define_object(self.model, 'pages', fm.TRUE, 's0', 'news')
        with self.assertRaises(DuplicateName):
            ops.define_object(self.model, 'pages', fm.TRUE, 's0', 'pages')

    def test_unique_flag_is_kept(self):
        _, obj = ops.define_object(self.model, 'pages', fm.AttrEq('kind', 'value', Text('blog')), 's0', 'x', unique=True)
        self.assertTrue(obj.unique)

    def test_element_level(self):
        self.assertEqual(fm.element_level('a'), 0)
        self.assertEqual(fm.element_level(frozenset({'a'})), 1)
        self.assertEqual(fm.element_level(frozenset({frozenset({'a'})})), 2)
        self.assertIsNone(fm.element_level(frozenset()))
        with self.assertRaises(LevelMismatch):
            fm.element_level(3)


class TestDynamics(unittest.TestCase):

    def setUp(self):
        model = ops.declare_domain(ops.empty_model(), 'pages')
        model = ops.define_concept(model, Concept('live', 'pages', 'Bool', ('flag',)))
        model = ops.define_concept(model, Concept('body', 'pages', 'Markup', ('html',)))
        model = ops.add_individual(model, 'pages', Individual.build('home', {('body', 'html'): Markup('<p/>')}))
        model = ops.add_individual(model, 'pages', Individual.build('news'))
        model = ops.add_individual(model, 'pages', Individual.build('about'))
        model = ops.set_state_membership(model, 'pages', 's0', {'home', 'news'})
        model = ops.set_state_membership(model, 'pages', 's1', {'home', 'about'})
        model = ops.set_state_membership(model, 'pages', 's2', set())
        self.model = model

    def test_state_delta(self):
        entered, left = ops.state_delta(self.model, 'pages', 's0', 's1')
        self.assertEqual(entered, frozenset({'about'}))
        self.assertEqual(left, frozenset({'news'}))
        self.assertEqual(ops.state_delta(self.model, 'pages', 's1', 's1'), (frozenset(), frozenset()))

    def test_states_satisfying(self):
        self.assertEqual(ops.states_satisfying(self.model, 'pages', 'home', fm.TRUE), [StateId('s0'), StateId('s1')])
        self.assertEqual(ops.states_satisfying(self.model, 'pages', 'about', fm.TRUE), [StateId('s1')])
        has_body = fm.AttrEq('body', 'html', Markup('<p/>'))
        self.assertEqual(ops.states_satisfying(self.model, 'pages', 'news', has_body), [])
        with self.assertRaises(UnknownIndividual):
            ops.states_satisfying(self.model, 'pages', 'ghost', fm.TRUE)

    def test_empty_membership(self):
        obj = ops.comprehend(self.model, 'pages', fm.TRUE, 's2', 'none')
        self.assertEqual(obj.extension, frozenset())
        with self.assertRaises(NotFound):
            ops.individualize(self.model, 'pages', fm.TRUE, 's2')


if __name__ == '__main__':
    unittest.main()
