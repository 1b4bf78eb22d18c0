# Copyright (c) 2025-2026 driftscript contributors
#
# Permission is hereby granted, free of charge, to any person obtaining
# a copy of this software and associated documentation files (the
# "Software"), to deal in the Software without restriction, including
# without limitation the rights to use, copy, modify, merge, publish,
# distribute, sublicense, and/or sell copies of the Software, and to
# permit persons to whom the Software is furnished to do so, subject to
# the following conditions:
#
# The above copyright notice and this permission notice shall be
# included in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF
# MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
# NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE
# LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION
# OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION
# WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.
#
"""turns DriftScript source text into tokens and then into a bounded
S-expression tree

Both stages keep 1-based line/column positions so that every later error can
point at the character that caused it.
"""

import logging
import re
from dataclasses import dataclass, field, fields
from enum import Enum
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .diagnostics import SourcePos
from .exceptions import ParseError, TokenizeError

logger = logging.getLogger('driftscript')

# parser and code generator recurse once per nesting level
MAX_DEPTH = 160


@dataclass(frozen=True)
class Limits:
    """capacity bounds applied to a single compilation call"""
    max_tokens: int = 1024
    max_nodes: int = 2048
    max_children: int = 16
    max_depth: int = 128
    max_results: int = 4096

    def __post_init__(self) -> None:
        for bound in fields(self):
            if getattr(self, bound.name) < 1:
                raise ValueError(f'{bound.name} must be at least 1')
        if self.max_depth > MAX_DEPTH:
            raise ValueError(f'max_depth must be at most {MAX_DEPTH}, got {self.max_depth}')


DEFAULT_LIMITS = Limits()


class TokenKind(Enum):
    LPAREN = 'LParen'
    RPAREN = 'RParen'
    KEYWORD = 'Keyword'
    STRING = 'String'
    SYMBOL = 'Symbol'


class Token(NamedTuple):
    kind: TokenKind
    text: str
    pos: SourcePos


class NodeKind(Enum):
    ATOM = 'Atom'
    LIST = 'List'


@dataclass(frozen=True)
class AstNode:
    """a leaf (`ATOM`) or a parenthesized list (`LIST`)

    Positions do not take part in equality, two trees parsed from sources that
    only differ in layout or comments compare equal.
    """
    kind: NodeKind
    value: str = ''
    quoted: bool = False
    children: Tuple['AstNode', ...] = ()
    pos: SourcePos = field(default=SourcePos(1, 1), compare=False)

    @classmethod
    def atom(cls, value: str, pos: SourcePos, quoted: bool = False) -> 'AstNode':
        return cls(NodeKind.ATOM, value=value, quoted=quoted, pos=pos)

    @classmethod
    def list_of(cls, children: Sequence['AstNode'], pos: SourcePos) -> 'AstNode':
        return cls(NodeKind.LIST, children=tuple(children), pos=pos)

    @property
    def is_atom(self) -> bool:
        return self.kind is NodeKind.ATOM

    @property
    def is_list(self) -> bool:
        return self.kind is NodeKind.LIST

    @property
    def head(self) -> Optional['AstNode']:
        if self.is_list and self.children:
            return self.children[0]
        return None

    @property
    def symbol(self) -> Optional[str]:
        """the value of an unquoted atom, None for anything else"""
        if self.is_atom and not self.quoted:
            return self.value
        return None

    def atoms(self) -> Iterator['AstNode']:
        """all atoms below (and including) this node, left to right"""
        if self.is_atom:
            yield self
        else:
            for child in self.children:
                yield from child.atoms()

    def to_source(self) -> str:
        if self.is_list:
            return '(' + ' '.join(child.to_source() for child in self.children) + ')'
        if self.quoted:
            return '"' + escape_string(self.value) + '"'
        return self.value

    def __str__(self) -> str:
        return self.to_source()


def escape_string(text: str) -> str:
    """the inverse of the tokenizer's unescaping"""
    return text.replace('\\', '\\\\').replace('"', '\\"')


_SCANNER = re.compile(r'''
      (?P<space>\s+)
    | (?P<comment>;[^\n]*)
    | (?P<lparen>\()
    | (?P<rparen>\))
    | (?P<string>"(?:[^"\\]|\\.)*")
    | (?P<quote>")
    | (?P<keyword>:[^\s()";]*)
    | (?P<symbol>[^\s()";]+)
''', re.VERBOSE | re.DOTALL)

_ESCAPE = re.compile(r'\\(.)', re.DOTALL)


def _pos_at(source: str, offset: int) -> SourcePos:
    line_start = source.rfind('\n', 0, offset) + 1
    return SourcePos(source.count('\n', 0, offset) + 1, offset - line_start + 1)


def _describe(char: str) -> str:
    return f'U+{ord(char):04X}'


def _check_printable(source: str, text: str, offset: int) -> None:
    for index, char in enumerate(text):
        if not char.isprintable():
            raise TokenizeError(f'unexpected character {_describe(char)}',
                                _pos_at(source, offset + index))


def _unescape(source: str, body: str, offset: int) -> str:
    """resolves `\\"` and `\\\\`, `offset` is the position of `body` in `source`"""
    if '\\' not in body:
        return body
    for escape in _ESCAPE.finditer(body):
        char = escape.group(1)
        if char not in '"\\':
            shown = f"'\\{char}'" if char.isprintable() else f"'\\' + {_describe(char)}"
            raise TokenizeError(f'invalid escape sequence {shown}',
                                _pos_at(source, offset + escape.start()))
    return _ESCAPE.sub(lambda match: match.group(1), body)


def tokenize(source: str, limits: Limits = DEFAULT_LIMITS) -> List[Token]:
    """converts DriftScript source into a list of tokens

    Comments (`;` to end of line) and whitespace are dropped, string tokens
    carry their unescaped content and keyword tokens keep their leading colon.

    :raises TokenizeError: on unterminated strings, invalid escapes, empty
        keywords, non-printable characters or more than `limits.max_tokens`
        tokens
    """
    tokens: List[Token] = []
    line, line_start = 1, 0
    for match in _SCANNER.finditer(source):
        group = match.lastgroup
        text = match.group()
        start = match.start()
        pos = SourcePos(line, start - line_start + 1)

        if group == 'space' or group == 'string':
            newlines = text.count('\n')
            if newlines:
                line += newlines
                line_start = start + text.rindex('\n') + 1
        if group == 'space' or group == 'comment':
            continue

        if group == 'lparen':
            token = Token(TokenKind.LPAREN, text, pos)
        elif group == 'rparen':
            token = Token(TokenKind.RPAREN, text, pos)
        elif group == 'string':
            token = Token(TokenKind.STRING, _unescape(source, text[1:-1], start + 1), pos)
        elif group == 'quote':
            raise TokenizeError('unterminated string', pos)
        elif group == 'keyword':
            if len(text) == 1:
                raise TokenizeError("empty keyword, ':' must be followed by a name", pos)
            _check_printable(source, text, start)
            token = Token(TokenKind.KEYWORD, text, pos)
        else:
            _check_printable(source, text, start)
            token = Token(TokenKind.SYMBOL, text, pos)

        if len(tokens) == limits.max_tokens:
            raise TokenizeError(f'too many tokens (max {limits.max_tokens})', pos)
        tokens.append(token)

    logger.debug(f'tokenized {len(tokens)} tokens')
    return tokens


class _Parser:

    def __init__(self, tokens: Sequence[Token], limits: Limits) -> None:
        self.tokens = tokens
        self.limits = limits
        self.index = 0
        self.allocated = 0

    def program(self) -> List[AstNode]:
        forms = []
        while self.index < len(self.tokens):
            token = self.tokens[self.index]
            if token.kind is TokenKind.RPAREN:
                raise ParseError("unexpected ')'", token.pos)
            forms.append(self.node(depth=0))
        return forms

    def allocate(self, pos: SourcePos) -> None:
        self.allocated += 1
        if self.allocated > self.limits.max_nodes:
            raise ParseError(f'too many nodes (max {self.limits.max_nodes})', pos)

    def node(self, depth: int) -> AstNode:
        token = self.tokens[self.index]
        self.index += 1
        self.allocate(token.pos)
        if token.kind is TokenKind.LPAREN:
            return self.list_node(token, depth + 1)
        return AstNode.atom(token.text, token.pos, quoted=token.kind is TokenKind.STRING)

    def list_node(self, opener: Token, depth: int) -> AstNode:
        if depth > self.limits.max_depth:
            raise ParseError(f'nesting too deep (max {self.limits.max_depth})', opener.pos)
        children: List[AstNode] = []
        while True:
            if self.index >= len(self.tokens):
                raise ParseError("unexpected end of input, unclosed '('", opener.pos)
            token = self.tokens[self.index]
            if token.kind is TokenKind.RPAREN:
                self.index += 1
                return AstNode.list_of(children, opener.pos)
            if len(children) == self.limits.max_children:
                raise ParseError(
                    f'too many list elements (max {self.limits.max_children})', token.pos)
            children.append(self.node(depth))


def parse_program(tokens: Sequence[Token], limits: Limits = DEFAULT_LIMITS) -> List[AstNode]:
    """builds one tree per top-level form

    Bare atoms at top level are accepted here, rejecting them is left to
    code generation.

    :raises ParseError: on unbalanced parentheses, lists with more than
        `limits.max_children` elements or more than `limits.max_nodes` nodes
    """
    forms = _Parser(tokens, limits).program()
    logger.debug(f'parsed {len(forms)} top-level forms')
    return forms


def parse_source(source: str, limits: Limits = DEFAULT_LIMITS) -> List[AstNode]:
    return parse_program(tokenize(source, limits), limits)
