import io
import json
import logging
import math
from enum import Enum
from pathlib import Path
from typing import List, Sequence, TextIO, Union

from circle_fft.models import Signal, Spectrum
from circle_fft.utils.exceptions import EmptySignalError, SignalParseError

logger = logging.getLogger("circle_fft.utils")

PathLike = Union[str, Path]


class SignalFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


def _parse_number(token: str, path: str, line_no: int) -> float:
    try:
        value = float(token)
    except ValueError:
        raise SignalParseError(path, f"not a number: {token.strip()!r}", line_no) from None
    if not math.isfinite(value):
        raise SignalParseError(path, f"value is not finite: {token.strip()!r}", line_no)
    return value


def parse_signal_csv(text: str, path: str = "<string>") -> List[complex]:
    """
    Parse one `re,im` sample per line. Blank lines and `#` comments are skipped;
    a lone number is read as a real sample.

    Raises:
        SignalParseError: With the 1-based line number of the first bad line
    """
    values: List[complex] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(",")
        if len(parts) > 2:
            raise SignalParseError(path, f"expected 're,im', got {len(parts)} fields", line_no)
        re_part = _parse_number(parts[0], path, line_no)
        im_part = _parse_number(parts[1], path, line_no) if len(parts) == 2 else 0.0
        values.append(complex(re_part, im_part))
    return values


def parse_signal_json(text: str, path: str = "<string>") -> List[complex]:
    """
    Parse a JSON list of [re, im] pairs (bare numbers are read as real samples).

    Raises:
        SignalParseError: On invalid JSON (with its line) or a malformed entry
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SignalParseError(path, f"invalid JSON: {e.msg}", e.lineno) from None
    if not isinstance(data, list):
        raise SignalParseError(path, "expected a JSON list of [re, im] pairs")

    values: List[complex] = []
    for i, item in enumerate(data):
        if isinstance(item, (int, float)) and not isinstance(item, bool):
            pair = [item, 0.0]
        elif isinstance(item, list) and len(item) == 2 and all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in item
        ):
            pair = item
        else:
            raise SignalParseError(path, f"entry {i} is not an [re, im] pair: {item!r}")
        try:
            re_part, im_part = float(pair[0]), float(pair[1])
        except OverflowError:
            raise SignalParseError(path, f"entry {i} is too large for a double") from None
        if not (math.isfinite(re_part) and math.isfinite(im_part)):
            raise SignalParseError(path, f"entry {i} is not finite: {item!r}")
        values.append(complex(re_part, im_part))
    return values


def read_signal(stream: TextIO, fmt: SignalFormat = SignalFormat.CSV, path: str = "<stream>") -> Signal:
    text = stream.read()
    values = parse_signal_json(text, path) if SignalFormat(fmt) is SignalFormat.JSON else parse_signal_csv(text, path)
    try:
        return Signal.of(values)
    except EmptySignalError:
        raise SignalParseError(path, "no samples found") from None


def load_signal(file_path: PathLike, fmt: SignalFormat = SignalFormat.CSV) -> Signal:
    """
    Load a signal from a CSV or JSON file.

    Args:
        file_path: Path to the signal file
        fmt: File format

    Returns:
        The parsed Signal

    Raises:
        FileNotFoundError: If the file doesn't exist
        SignalParseError: If the contents are not valid UTF-8 or not a valid signal
    """
    try:
        with open(file_path, "rb") as f:
            raw = f.read()
    except FileNotFoundError:
        logger.error(f"File not found: {file_path}")
        raise

    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        line = raw[: e.start].count(b"\n") + 1
        raise SignalParseError(str(file_path), "not valid UTF-8 text", line) from None

    signal = read_signal(io.StringIO(text), fmt, str(file_path))
    logger.info(f"Loaded {signal.n} samples from {file_path}")
    return signal


def format_values(values: Union[Signal, Spectrum], fmt: SignalFormat = SignalFormat.CSV) -> str:
    """Serialize values in the same formats load_signal reads; floats use repr so they round-trip exactly."""
    if SignalFormat(fmt) is SignalFormat.JSON:
        return json.dumps(values.to_pairs()) + "\n"
    # + 0.0 turns -0.0 into 0.0
    return "".join(f"{re + 0.0!r},{im + 0.0!r}\n" for re, im in values.to_pairs())


def save_signal(values: Union[Signal, Spectrum], file_path: PathLike, fmt: SignalFormat = SignalFormat.CSV) -> None:
    """
    Save a signal or spectrum to a file.

    Raises:
        OSError: If there's an error writing to the file
    """
    try:
        Path(file_path).parent.mkdir(parents=True, exist_ok=True)
        with open(file_path, "w", encoding="utf-8") as f:
            f.write(format_values(values, fmt))
        logger.info(f"Saved {values.n} values to {file_path}")
    except OSError:
        logger.error(f"Error writing to file: {file_path}")
        raise


def parse_int_list(text: str) -> List[int]:
    """Parse '256,512,1024' into integers."""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None


def parse_labels(text: str, expected: int) -> Sequence[str]:
    labels = [part.strip() for part in text.split(",")]
    if len(labels) != expected:
        raise ValueError(f"expected {expected} labels, got {len(labels)}")
    return labels
