"""
Reading and writing D0LEC spec files. One directive per line:

    alphabet A B C D
    gen A -> BC
    seed B
    ext A -> 0
    mod 3

Words are written as runs of single-character symbols, or whitespace
separated when a symbol (or a digit value) needs more than one character.
``#`` starts a comment.
"""

from pathlib import Path
from typing import Dict, List, Union

from ..algebra import Domain
from ..exceptions import InvalidModulus, InvalidMorphism, InvalidSpecFile, UnstableSeed
from .morphism import D0LECSpec, Morphism


def _split_word(text: str) -> List[str]:
    text = text.strip()
    if any(char.isspace() for char in text):
        return text.split()
    return list(text)


def _parse_rule(line: str, path: str):
    left, arrow, right = line.partition('->')
    if not arrow:
        raise InvalidSpecFile(path, 'rule without "->": {}'.format(line))
    symbol = left.strip()
    word = _split_word(right)
    if not symbol or not word:
        raise InvalidSpecFile(path, 'incomplete rule: {}'.format(line))
    return symbol, word


def parse_spec(text: str, path: str = '<string>') -> D0LECSpec:
    alphabet = None
    generator = {}  # type: Dict[str, List[str]]
    extension = {}  # type: Dict[str, List[int]]
    seed = None
    domain = None

    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split('#', 1)[0].strip()
        if not line:
            continue
        directive, _, rest = line.partition(' ')
        rest = rest.strip()
        where = '{}:{}'.format(path, line_number)
        if directive == 'alphabet':
            alphabet = rest.split()
        elif directive == 'gen':
            symbol, word = _parse_rule(rest, where)
            if symbol in generator:
                raise InvalidSpecFile(where, 'second rule for {}'.format(symbol))
            generator[symbol] = word
        elif directive == 'ext':
            symbol, word = _parse_rule(rest, where)
            try:
                extension[symbol] = [int(digit) for digit in word]
            except ValueError:
                raise InvalidSpecFile(where, 'extension values must be digits')
        elif directive == 'seed':
            seed = rest
        elif directive == 'mod':
            try:
                domain = Domain.parse(rest)
            except InvalidModulus as error:
                raise InvalidSpecFile(where, str(error))
        else:
            raise InvalidSpecFile(where, 'unknown directive "{}"'.format(directive))

    for name, value in (('alphabet', alphabet), ('gen', generator),
                        ('ext', extension), ('seed', seed), ('mod', domain)):
        if not value:
            raise InvalidSpecFile(path, 'missing "{}" directive'.format(name))
    if set(generator) != set(alphabet) or len(alphabet) != len(set(alphabet)):
        raise InvalidSpecFile(path, 'gen rules do not match the alphabet')
    if set(extension) != set(alphabet):
        raise InvalidSpecFile(path, 'ext rules do not match the alphabet')

    try:
        return D0LECSpec(generator=Morphism({s: generator[s] for s in alphabet}),
                         seed=seed,
                         extension=Morphism({s: extension[s] for s in alphabet}),
                         domain=domain)
    except (InvalidMorphism, UnstableSeed) as error:
        raise InvalidSpecFile(path, str(error))


def load_spec(path: Union[str, Path]) -> D0LECSpec:
    path = Path(path)
    with path.open() as spec_file:
        return parse_spec(spec_file.read(), str(path))


def _join_word(word) -> str:
    word = [str(symbol) for symbol in word]
    if all(len(symbol) == 1 for symbol in word):
        return ''.join(word)
    return ' '.join(word)


def dump_spec(spec: D0LECSpec) -> str:
    """
    Canonical text of ``spec``: ``parse_spec(dump_spec(s))`` dumps to the
    same bytes again
    """
    alphabet = spec.generator.alphabet
    lines = ['alphabet ' + ' '.join(map(str, alphabet))]
    lines.extend('gen {} -> {}'.format(symbol, _join_word(spec.generator[symbol]))
                 for symbol in alphabet)
    lines.append('seed {}'.format(spec.seed))
    lines.extend('ext {} -> {}'.format(symbol, _join_word(spec.extension[symbol]))
                 for symbol in alphabet)
    lines.append('mod {}'.format(spec.domain))
    return '\n'.join(lines) + '\n'
