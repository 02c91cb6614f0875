import logging
import os
import tempfile
from pathlib import Path
from typing import Optional, Union

import pandas as pd

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def setup_logger(level=logging.INFO):
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.StreamHandler()
        ]
    )
    return logging.getLogger(__name__)


def _atomic_target(path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def write_text_atomic(path: PathLike, text: str) -> Path:
    """Write through a temporary file in the same directory, then rename over `path`."""
    path = _atomic_target(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise
    logger.info("wrote %s", path)
    return path


def write_csv_atomic(path: PathLike, frame: pd.DataFrame) -> Path:
    return write_text_atomic(path, frame.to_csv(index=False, float_format="%.17g"))


def threads_from_env(default: Optional[int] = None) -> Optional[int]:
    """THREADS caps fan-out of independent runs; unset or invalid means sequential."""
    raw = os.getenv("THREADS")
    if not raw:
        return default
    try:
        threads = int(raw)
    except ValueError:
        logger.warning("ignoring non-integer THREADS=%r", raw)
        return default
    return threads if threads > 0 else default
