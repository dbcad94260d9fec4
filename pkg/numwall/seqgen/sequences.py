"""
Sequence descriptions the walls are computed from: builtins, periodic words,
D0LEC specs and finite segments
"""

from dataclasses import dataclass, field, replace
from functools import partial
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from ..algebra import Domain
from ..exceptions import InvalidDigitsFile, OutOfRange, UnknownSequence
from . import closed_forms
from .morphism import D0LECSpec, d0lec_extend
from .specfile import load_spec

SEQUENCES_DIR = Path(__file__).resolve().parent.parent / 'data' / 'sequences'


class SequenceSpec:

    """
    A sequence of canonical values of :attr:`domain`. ``first`` is the
    smallest valid index, or ``None`` for two-sided sequences.
    """

    # a field or property of every subclass
    domain: Domain

    @property
    def first(self) -> Optional[int]:
        return 0

    @property
    def last(self) -> Optional[int]:
        return None

    @property
    def period(self) -> Optional[int]:
        return None

    def term(self, index: int) -> int:
        raise NotImplementedError

    def terms(self, start: int, length: int) -> List[int]:
        self._check_range(start, length)
        return [self.term(index) for index in range(start, start + length)]

    def _check_range(self, start: int, length: int) -> None:
        if length <= 0:
            return
        if self.first is not None and start < self.first:
            raise OutOfRange('Term {} requested, sequence starts at {}'.format(start, self.first))
        if self.last is not None and start + length - 1 > self.last:
            raise OutOfRange('Term {} requested, sequence ends at {}'.format(start + length - 1,
                                                                                  self.last))

    def describe(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class PeriodicWord(SequenceSpec):
    digits: Tuple[int, ...]
    domain: Domain

    first = None

    def __post_init__(self):
        if not self.digits:
            raise ValueError('A periodic word must not be empty')
        object.__setattr__(self, 'digits', tuple(self.domain.reduce(d) for d in self.digits))

    @property
    def period(self) -> int:
        return len(self.digits)

    def term(self, index: int) -> int:
        return self.digits[index % len(self.digits)]

    def describe(self) -> str:
        return 'period [{}] mod {}'.format(' '.join(map(str, self.digits)), self.domain)


@dataclass(frozen=True)
class FiniteSegment(SequenceSpec):

    """Terms ``start .. start+len(digits)-1``; anything else is out of range"""

    digits: Tuple[int, ...]
    domain: Domain
    start: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'digits', tuple(self.domain.reduce(d) for d in self.digits))

    @property
    def first(self) -> int:
        return self.start

    @property
    def last(self) -> int:
        return self.start + len(self.digits) - 1

    def term(self, index: int) -> int:
        if not self.start <= index <= self.last:
            raise OutOfRange('Term {} is outside the segment {}..{}'.format(index, self.start, self.last))
        return self.digits[index - self.start]

    def terms(self, start: int, length: int) -> List[int]:
        self._check_range(start, length)
        offset = start - self.start
        return list(self.digits[offset:offset + length])

    def describe(self) -> str:
        return 'segment of {} terms from {} mod {}'.format(len(self.digits), self.start, self.domain)


@dataclass(frozen=True)
class D0LEC(SequenceSpec):
    spec: D0LECSpec
    name: str = ''

    @property
    def domain(self) -> Domain:
        return self.spec.domain

    def term(self, index: int) -> int:
        self._check_range(index, 1)
        return self.spec.term(index)

    def terms(self, start: int, length: int) -> List[int]:
        self._check_range(start, length)
        return d0lec_extend(self.spec, start, length)

    def describe(self) -> str:
        return '{} mod {}'.format(self.name or 'D0LEC sequence', self.domain)


@dataclass(frozen=True)
class Builtin(SequenceSpec):

    """
    A named sequence with a closed form. Values are computed as integers and
    reduced into ``domain``.
    """

    name: str
    domain: Domain
    formula: Callable[[int], int] = field(compare=False, repr=False)
    first: Optional[int] = None

    def term(self, index: int) -> int:
        self._check_range(index, 1)
        return self.domain.reduce(self.formula(index))

    def describe(self) -> str:
        return '{} mod {}'.format(self.name, self.domain)


# name -> default modulus; names without a formula are read from data/sequences
BUILTIN_DEFAULTS = {
    'thue-morse': 2,
    'u': 3,
    'v': 5,
    'rook': 2,
    'knight': 2,
    'pagoda': 3,
    'rueppel': 2,
    'zigzag': 3,
    'thue-rook': 2,
    'libran': 2,
    'nosquare6': 2,
    'nosquare4': 2,
}  # type: Dict[str, int]

TWO_SIDED = {'rook', 'knight', 'pagoda', 'libran'}

BUILTIN_DESCRIPTIONS = {
    'thue-morse': 'cube-free binary Thue-Morse sequence',
    'u': 'square-free ternary sequence',
    'v': 'square-free quaternary sequence, symbols A..D as digits 0..3',
    'rook': 'digit above the lowest set bit of n',
    'knight': 'Rook difference R(n+1) - R(n-1) mod 2',
    'pagoda': 'Rook difference R(n+1) - R(n-1) mod p',
    'rueppel': '1 exactly where n+1 is a power of two',
    'zigzag': 'ternary sequence with a zig-zag wall',
    'thue-rook': 'Thue-Morse plus Rook mod 2',
    'libran': 'seeded pseudorandom digits',
    'nosquare6': 'binary, no squared word longer than 6',
    'nosquare4': 'binary, no squared word longer than 4',
}


def spec_file(name: str) -> Path:
    return SEQUENCES_DIR / '{}.d0l'.format(name)


def _formula(name: str, domain: Domain, seed: int) -> Optional[Callable[[int], int]]:
    if name == 'rook':
        return closed_forms.rook
    if name == 'knight':
        return closed_forms.knight
    if name == 'pagoda':
        # over the integers the difference itself, -1..1
        if domain.is_field:
            return partial(closed_forms.pagoda, p=domain.p)
        return closed_forms.rook_difference
    if name == 'rueppel':
        return closed_forms.rueppel
    if name == 'thue-morse':
        return closed_forms.thue_morse
    if name == 'libran':
        base = domain.p if domain.is_field else 10
        return partial(closed_forms.libran, seed=seed, base=base)
    return None


def builtin_sequence(name: str, domain: Optional[Domain] = None, seed: int = 1) -> SequenceSpec:
    """
    The builtin sequence ``name`` in ``domain`` (its default modulus when
    omitted). ``seed`` only matters for ``libran``.
    """
    name = name.lower()
    if name not in BUILTIN_DEFAULTS:
        raise UnknownSequence(name, BUILTIN_DEFAULTS)
    if domain is None:
        domain = Domain.prime_field(BUILTIN_DEFAULTS[name])
    formula = _formula(name, domain, seed)
    if formula is not None:
        label = 'libran(seed={})'.format(seed) if name == 'libran' else name
        return Builtin(name=label, domain=domain, formula=formula,
                       first=None if name in TWO_SIDED else 0)
    spec = load_spec(spec_file(name))
    if spec.domain != domain:
        spec = replace(spec, domain=domain)
    return D0LEC(spec=spec, name=name)


def parse_digits(text: str, path: str = '<string>') -> List[int]:
    """
    Digits of a raw digits file: ASCII digits, whitespace, ``#`` comments
    """
    digits = []
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split('#', 1)[0]
        for char in line:
            if char.isspace():
                continue
            if char not in '0123456789':
                raise InvalidDigitsFile('{}:{}'.format(path, line_number),
                                        'unexpected character {!r}'.format(char))
            digits.append(int(char))
    if not digits:
        raise InvalidDigitsFile(path, 'no digits')
    return digits


def load_digits(path: Union[str, Path]) -> List[int]:
    path = Path(path)
    with path.open() as digits_file:
        return parse_digits(digits_file.read(), str(path))


def parse_word(text: str) -> List[int]:
    """
    A period given on the command line: ``111010``, or whitespace or comma
    separated numbers for values above 9
    """
    text = text.strip()
    if any(char in text for char in ' ,'):
        return [int(part) for part in text.replace(',', ' ').split()]
    return [int(char) for char in text]


def periodic_word(digits: Sequence[int], domain: Domain) -> PeriodicWord:
    return PeriodicWord(digits=tuple(digits), domain=domain)


def finite_segment(digits: Sequence[int], domain: Domain, start: int = 0) -> FiniteSegment:
    return FiniteSegment(digits=tuple(digits), domain=domain, start=start)
