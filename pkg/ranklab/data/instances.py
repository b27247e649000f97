"""
Instance files: one scalar per line, blank lines and ``#`` comment lines ignored.
"""
import io
import typing as th
from pathlib import Path

from ranklab.numeric import Scalar, ScalarParseError, format_scalar, parse_scalar

__all__ = ['InstanceFileError', 'parse_instance', 'read_instance', 'format_instance', 'write_instance']


class InstanceFileError(ValueError):
    def __init__(self, path: str, line: int, reason: str):
        super().__init__(f'{path}:{line}: {reason}')
        self.path = path
        self.line = line


def parse_instance(lines: th.Iterable[str], path: str = '<stream>') -> th.List[Scalar]:
    values = []
    for number, line in enumerate(lines, start=1):
        text = line.strip()
        if not text or text.startswith('#'):
            continue
        try:
            values.append(parse_scalar(text))
        except ScalarParseError as e:
            raise InstanceFileError(path, number, str(e))
    return values


def read_instance(path: th.Union[str, Path]) -> th.List[Scalar]:
    with open(path, encoding='utf-8') as f:
        return parse_instance(f, str(path))


def format_instance(values: th.Iterable[Scalar], header: th.Optional[th.Sequence[str]] = None) -> str:
    buffer = io.StringIO()
    for line in header or ():
        buffer.write(f'# {line}\n')
    for value in values:
        buffer.write(f'{format_scalar(value)}\n')
    return buffer.getvalue()


def write_instance(values: th.Iterable[Scalar], out: th.Union[str, Path, th.TextIO],
                   header: th.Optional[th.Sequence[str]] = None) -> None:
    text = format_instance(values, header)
    if hasattr(out, 'write'):
        out.write(text)
        return
    Path(out).parent.mkdir(parents=True, exist_ok=True)
    with open(out, 'w', newline='\n', encoding='utf-8') as f:
        f.write(text)
