"""
Message / codeword / received-word text files
메시지 / 부호어 / 수신어 텍스트 파일

One decimal element code per whitespace-separated token; `?` marks an
erasure in received words. Written files use single spaces and a trailing LF.
"""

import re
from pathlib import Path
from typing import List, Optional, Sequence, Union

from ..errors import LengthMismatch, WordFileError
from .encoder import Codeword, Message
from .erasure import ERASED, ReceivedWord
from .params import CodeSpec, DegreeRegion

ERASURE_TOKEN = "?"

_TOKEN = re.compile(r"\S+")
_DECIMAL = re.compile(r"[0-9]+")

PathLike = Union[str, Path]


def parse_symbols(text: str, q: int, expected_len: int, allow_erasures: bool = False) -> List[Optional[int]]:
    symbols: List[Optional[int]] = []
    for line_no, line in enumerate(text.split("\n"), start=1):
        for match in _TOKEN.finditer(line):
            token = match.group()
            column = match.start() + 1
            if token == ERASURE_TOKEN and allow_erasures:
                symbols.append(ERASED)
                continue
            if not _DECIMAL.fullmatch(token):
                raise WordFileError(f"bad token {token!r}", line_no, column)
            value = int(token)
            if value >= q:
                raise WordFileError(f"symbol {value} outside [0, {q})", line_no, column)
            symbols.append(value)
    if len(symbols) != expected_len:
        raise LengthMismatch(f"file holds {len(symbols)} symbols, expected {expected_len}")
    return symbols


def format_symbols(symbols: Sequence[Optional[int]]) -> str:
    return " ".join(ERASURE_TOKEN if s is ERASED else str(int(s)) for s in symbols) + "\n"


def _read(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise WordFileError(f"cannot read {path}: {e}") from e


def read_message(path: PathLike, region: DegreeRegion) -> Message:
    text = _read(path)
    return Message.from_codes(region, parse_symbols(text, region.spec.q, region.K))


def read_received(path: PathLike, spec: CodeSpec) -> ReceivedWord:
    text = _read(path)
    return ReceivedWord(spec, tuple(parse_symbols(text, spec.q, spec.N, allow_erasures=True)))


def read_codeword(path: PathLike, spec: CodeSpec) -> Codeword:
    text = _read(path)
    return Codeword(spec, tuple(parse_symbols(text, spec.q, spec.N)))


def write_symbols(path: PathLike, symbols: Sequence[Optional[int]]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(format_symbols(symbols))
