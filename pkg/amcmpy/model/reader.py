"""
Reader for the textual model format::

    domain pages;
    domain people : Text;
    concept title over pages : Text fns(value, short);
    individual pages.p1 { title.value = "Home"; title.short = "H"; }
    state s0;
    state s0 pages = { p1, p2 };
    object home = { x in pages | title.value == "Home" } @ s0 unique;

Formulas::

    fmla := conj ("or" conj)*
    conj := neg ("and" neg)*
    neg  := "not" neg | atom
    atom := "true" | "false" | "(" fmla ")"
          | <concept>.<fn> ("==" | "!=") <literal>
          | "in" <object>
"""

if __loader__.name == '__main__':
    import sys
    sys.path.append(sys.path[0] + '/../..')

from pathlib import Path

import structlog

from amcmpy.constants.project import TEXT, SCALAR_TAGS
from amcmpy.core.exceptions import DuplicateName, ModelError, ParseError
from amcmpy.core.values import Bool
from amcmpy.lang.lexer import tokenize
from amcmpy.lang.parser import TokenStream
from amcmpy.lang.tokens import TokenKind
from amcmpy.model import formula as fm
from amcmpy.model import operations as ops
from amcmpy.model.types import Concept, Individual, LevelObject, StateId

logger = structlog.get_logger(__name__)

DECLARATIONS = frozenset({"'domain'", "'concept'", "'individual'", "'state'", "'object'"})


class ModelReader:
    """
    Builds a DomainModel declaration by declaration.

    In strict mode every declaration goes through the checked operations and
    the first violation raises. In lenient mode (used by ``check``) entities
    are recorded as written so that an integrity report can describe every
    problem at once; only syntax errors and name clashes still raise.
    """

    def __init__(self, stream: TokenStream, strict: bool = True) -> None:
        self.stream = stream
        self.strict = strict
        self.model = ops.empty_model()

    def read(self):
        while not self.stream.at_end():
            self.declaration()
        return self.model

    def declaration(self) -> None:
        token = self.stream.peek()
        handlers = {
            'domain': self.domain,
            'concept': self.concept,
            'individual': self.individual,
            'state': self.state,
            'object': self.object,
        }
        handler = handlers.get(token.text) if token.kind is TokenKind.IDENTIFIER else None
        if handler is None:
            raise self.stream.fail(DECLARATIONS)
        self.stream.advance()
        handler()

    def name(self) -> str:
        return self.stream.identifier().text

    def type_tag(self) -> str:
        token = self.stream.identifier()
        if token.text not in SCALAR_TAGS:
            raise ParseError(f"expected a scalar type, found '{token.text}'", token.position,
                             set(SCALAR_TAGS), file=self.stream.file)
        return token.text

    def names(self, closing: str) -> list:
        """Comma-separated identifiers up to (and consuming) closing."""
        found = []
        while not self.stream.check_punct(closing):
            found.append(self.name())
            if not self.stream.check_punct(closing):
                self.stream.punct(',')
        self.stream.punct(closing)
        return found

    def state_index(self) -> str:
        token = self.stream.peek()
        if token is not None and token.kind is TokenKind.LITERAL and token.text.lstrip('-').isdigit():
            return self.stream.advance().text
        return self.name()

    # -- declarations --

    def domain(self) -> None:
        name = self.name()
        element_type = TEXT
        if self.stream.check_punct(':'):
            self.stream.advance()
            element_type = self.type_tag()
        self.stream.punct(';')
        self.model = ops.declare_domain(self.model, name, element_type)

    def concept(self) -> None:
        token = self.stream.peek()
        name = self.name()
        self.stream.word('over')
        domain = self.name()
        self.stream.punct(':')
        value_type = self.type_tag()
        self.stream.word('fns')
        self.stream.punct('(')
        functions = self.names(')')
        self.stream.punct(';')
        try:
            concept = Concept(name, domain, value_type, functions)
        except ValueError as e:
            raise ParseError(str(e), token.position, {'distinct function names'}, file=self.stream.file) from e
        if self.strict or name in self.model.concepts:
            self.model = ops.define_concept(self.model, concept)
        else:
            concepts = dict(self.model.concepts)
            concepts[name] = concept
            self.model = self.model.evolve(concepts=concepts)

    def individual(self) -> None:
        domain = self.name()
        self.stream.punct('.')
        ident = self.name()
        self.stream.punct('{')
        attributes = {}
        while not self.stream.check_punct('}'):
            position = self.stream.position()
            concept = self.name()
            self.stream.punct('.')
            function = self.name()
            self.stream.punct('=')
            literal = self.stream.literal().value
            self.stream.punct(';')
            if (concept, function) in attributes:
                raise ParseError(f"attribute '{concept}.{function}' is set twice", position,
                                 {'distinct attributes'}, file=self.stream.file)
            attributes[(concept, function)] = literal
        self.stream.punct('}')
        individual = Individual.build(ident, attributes)
        if self.strict or ident in self.model.individuals or domain not in self.model.domains:
            self.model = ops.add_individual(self.model, domain, individual)
        else:
            individuals = dict(self.model.individuals)
            individuals[ident] = Individual(ident, individual.attributes, domain)
            self.model = self.model.evolve(individuals=individuals)

    def state(self) -> None:
        state = StateId(self.state_index())
        if self.stream.check_punct(';'):
            self.stream.advance()
            self.model = ops.declare_state(self.model, state)
            return
        domain = self.name()
        self.stream.punct('=')
        self.stream.punct('{')
        members = self.names('}')
        self.stream.punct(';')
        if self.strict or domain not in self.model.domains:
            self.model = ops.set_state_membership(self.model, domain, state, members)
        else:
            domains = dict(self.model.domains)
            domains[domain] = domains[domain].with_members(state, members)
            states = self.model.states if state in self.model.states else self.model.states + (state,)
            self.model = self.model.evolve(domains=domains, states=states)

    def object(self) -> None:
        name = self.name()
        self.stream.punct('=')
        self.stream.punct('{')
        self.name()
        self.stream.word('in')
        base = self.name()
        self.stream.punct('|')
        f = self.formula()
        self.stream.punct('}')
        self.stream.punct('@')
        state = StateId(self.state_index())
        unique = False
        if self.stream.check_word('unique'):
            self.stream.advance()
            unique = True
        self.stream.punct(';')
        if self.strict:
            self.model, _ = ops.define_object(self.model, base, f, state, name, unique)
            return
        try:
            obj = ops.comprehend(self.model, base, f, state, name, unique, stratified=False)
        except ModelError as e:
            if isinstance(e, DuplicateName):
                raise
            logger.debug("object_unresolved", name=name, error=str(e))
            level = self.model.objects[base].level + 1 if base in self.model.objects else 1
            obj = LevelObject(name, level, base, f, frozenset(), state, unique)
        self.model = ops.add_object(self.model, obj)

    # -- formulas --

    def formula(self):
        f = self.conjunction()
        while self.stream.check_word('or'):
            self.stream.advance()
            f = fm.Or(f, self.conjunction())
        return f

    def conjunction(self):
        f = self.negation()
        while self.stream.check_word('and'):
            self.stream.advance()
            f = fm.And(f, self.negation())
        return f

    def negation(self):
        if self.stream.check_word('not'):
            self.stream.advance()
            return fm.Not(self.negation())
        return self.atom()

    def atom(self):
        token = self.stream.peek()
        if token is None:
            raise self.stream.fail({"'true'", "'false'", "'('", "'in'", 'attribute'})
        if token.kind is TokenKind.LITERAL and isinstance(token.value, Bool):
            self.stream.advance()
            return fm.TRUE if token.value.value else fm.FALSE
        if token.is_punct('('):
            self.stream.advance()
            f = self.formula()
            self.stream.punct(')')
            return f
        if token.is_word('in'):
            self.stream.advance()
            return fm.InObject(self.name())
        concept = self.name()
        self.stream.punct('.')
        function = self.name()
        operator = self.stream.peek()
        if operator is None or not (operator.is_punct('==') or operator.is_punct('!=')):
            raise self.stream.fail({"'=='", "'!='"})
        self.stream.advance()
        literal = self.stream.literal().value
        node = fm.AttrEq if operator.text == '==' else fm.AttrNeq
        return node(concept, function, literal)


def parse_formula(text: str):
    """A standalone formula, e.g. ``title.value == "Home" and not in drafts``."""
    stream = TokenStream(tokenize(text), text)
    f = ModelReader(stream).formula()
    stream.done()
    return f

def load_model(text: str, file: str = None, strict: bool = True):
    stream = TokenStream(tokenize(text, file), text, file)
    model = ModelReader(stream, strict).read()
    logger.debug("model_loaded", file=file, strict=strict, domains=len(model.domains),
                 individuals=len(model.individuals), objects=len(model.objects))
    return model

def read_model(path, strict: bool = True):
    path = Path(path)
    return load_model(path.read_text(encoding='utf-8'), file=str(path), strict=strict)


if __name__ == '__main__':
    model = read_model(sys.argv[1])
    for obj in model.objects.values():
        print(obj.name, obj.level, sorted(map(str, obj.extension)))
