"""
Constant-width substitutions, their fixed points, and sequences obtained by
pushing a fixed point through a final coding (D0LEC sequences)
"""

from dataclasses import dataclass
from itertools import islice, repeat
from typing import Dict, Hashable, Iterator, List, Mapping, Sequence, Tuple

from ..algebra import Domain
from ..exceptions import InvalidMorphism, UnstableSeed

Symbol = Hashable


class Morphism:

    """
    Deterministic, context free substitution: one right hand side per
    symbol, all of them of the same length
    """

    def __init__(self, rules: Mapping[Symbol, Sequence]):
        if not rules:
            raise InvalidMorphism('A morphism needs at least one rule')
        self.rules = {symbol: tuple(image)
                      for symbol, image in rules.items()}  # type: Dict[Symbol, Tuple]
        widths = {len(image) for image in self.rules.values()}
        if len(widths) != 1:
            raise InvalidMorphism('Rules have different widths: {}'.format(
                sorted(widths)))
        self.width = widths.pop()
        if self.width < 1:
            raise InvalidMorphism('Rules must not be empty')

    @property
    def alphabet(self) -> List[Symbol]:
        return list(self.rules)

    def __call__(self, word: Sequence) -> List:
        image = []
        for symbol in word:
            image.extend(self.rules[symbol])
        return image

    def __getitem__(self, symbol: Symbol) -> Tuple:
        return self.rules[symbol]

    def __eq__(self, other):
        return (isinstance(other, Morphism) and
                list(self.rules.items()) == list(other.rules.items()))

    def __repr__(self):
        rules = ', '.join('{}->{}'.format(symbol, ''.join(map(str, image)))
                          for symbol, image in self.rules.items())
        return 'Morphism({})'.format(rules)

    def relabel(self, mapping: Mapping[Symbol, Symbol]) -> 'Morphism':
        """
        Conjugate by a permutation of the alphabet: symbols are renamed on
        both sides of every rule
        """
        return Morphism({mapping.get(symbol, symbol):
                         [mapping.get(s, s) for s in image]
                         for symbol, image in self.rules.items()})


def _check_seed(morphism: Morphism, seed: Symbol) -> None:
    if seed not in morphism.rules or morphism.rules[seed][0] != seed:
        raise UnstableSeed(seed)


def _expand(morphism: Morphism, seed: Symbol) -> Iterator[Symbol]:
    if morphism.width == 1:
        yield from repeat(seed)
        return
    word = list(morphism.rules[seed])
    source = 1
    position = 0
    while True:
        while position < len(word):
            yield word[position]
            position += 1
        # u = m(u), so block i of the fixed point is the image of symbol i
        word.extend(morphism.rules[word[source]])
        source += 1


def fixed_point(morphism: Morphism, seed: Symbol) -> Iterator[Symbol]:
    """
    Iterates over the right-infinite fixed point of ``morphism`` that starts
    with ``seed``. For width 1 that is the constant word ``seed seed ...``.
    """
    _check_seed(morphism, seed)
    return _expand(morphism, seed)


def d0l_generate(morphism: Morphism, seed: Symbol, length: int) -> List[Symbol]:
    """
    First ``length`` symbols of the fixed point starting from ``seed``
    """
    if length < 0:
        raise ValueError('length must not be negative')
    return list(islice(fixed_point(morphism, seed), length))


def fixed_point_term(morphism: Morphism, seed: Symbol, index: int) -> Symbol:
    """
    Symbol ``index`` of the fixed point, found in O(log index) steps by
    reading the base-w digits of the index from the top
    """
    _check_seed(morphism, seed)
    if index < 0:
        raise ValueError('index must not be negative')
    if morphism.width == 1:
        return seed
    digits = []
    while index:
        index, digit = divmod(index, morphism.width)
        digits.append(digit)
    symbol = seed
    for digit in reversed(digits):
        symbol = morphism.rules[symbol][digit]
    return symbol


@dataclass(frozen=True)
class D0LECSpec:

    """
    A D0L fixed point pushed through a constant-width final coding into a
    domain
    """

    generator: Morphism
    seed: Symbol
    extension: Morphism
    domain: Domain

    def __post_init__(self):
        alphabet = set(self.generator.alphabet)
        for symbol, image in self.generator.rules.items():
            unknown = set(image) - alphabet
            if unknown:
                raise InvalidMorphism('Rule for {} uses unknown symbols {}'.format(
                    symbol, sorted(map(str, unknown))))
        missing = alphabet - set(self.extension.alphabet)
        if missing:
            raise InvalidMorphism('Extension has no rule for {}'.format(
                sorted(map(str, missing))))
        _check_seed(self.generator, self.seed)
        extension = Morphism({symbol: [self.domain.reduce(v) for v in image]
                              for symbol, image in self.extension.rules.items()})
        object.__setattr__(self, 'extension', extension)

    def term(self, index: int) -> int:
        block, offset = divmod(index, self.extension.width)
        symbol = fixed_point_term(self.generator, self.seed, block)
        return self.extension.rules[symbol][offset]


def d0lec_extend(spec: D0LECSpec, start: int, length: int) -> List[int]:
    """
    Terms ``start .. start+length-1`` of the coded fixed point, as canonical
    values of ``spec.domain``. Only the prefix of the fixed point up to the
    last needed block is expanded.
    """
    if start < 0:
        raise ValueError('D0LEC sequences are right-infinite: start must be >= 0')
    if length <= 0:
        return []
    width = spec.extension.width
    first_block = start // width
    last_block = (start + length - 1) // width
    symbols = islice(fixed_point(spec.generator, spec.seed),
                     first_block, last_block + 1)
    terms = []
    for symbol in symbols:
        terms.extend(spec.extension.rules[symbol])
    offset = start - first_block * width
    return terms[offset:offset + length]
