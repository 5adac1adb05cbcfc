"""On-disk cache for sieve segments.

File layout (little endian)::

    magic    8 bytes  b"PSBVSEG\\x00"
    version  uint16
    reserved uint16
    lo       uint64
    hi       uint64
    crc32    uint32   of the packed bitmap
    bitmap   ceil((hi-lo+1)/8) bytes, numpy.packbits order

The cache is advisory: a file that fails any check is ignored and the
segment is re-sieved.
"""
from __future__ import annotations

import logging
import random
import struct
import zlib
from pathlib import Path
from typing import Optional

import numpy as np

from .arith import SieveSegment, _is_prime_trial, sieve

log = logging.getLogger(__name__)

MAGIC = b"PSBVSEG\x00"
VERSION = 1
_HEADER = struct.Struct("<8sHHQQI")
SPOT_CHECKS = 64


def segment_path(cache_dir: Path, lo: int, hi: int) -> Path:
    return Path(cache_dir) / f"seg_{lo}_{hi}.bin"


def write_segment(path: Path, seg: SieveSegment) -> None:
    packed = np.packbits(seg.flags.astype(bool)).tobytes()
    header = _HEADER.pack(MAGIC, VERSION, 0, seg.lo, seg.hi, zlib.crc32(packed))
    tmp = Path(path).with_suffix(".tmp")
    tmp.write_bytes(header + packed)
    tmp.replace(path)


def read_segment(path: Path, lo: Optional[int] = None, hi: Optional[int] = None) -> Optional[SieveSegment]:
    """Load a cached segment, or None if missing, stale or corrupt."""
    try:
        raw = Path(path).read_bytes()
    except OSError:
        return None
    if len(raw) < _HEADER.size:
        return None
    magic, version, _, seg_lo, seg_hi, crc = _HEADER.unpack_from(raw)
    if magic != MAGIC or version != VERSION or seg_hi < seg_lo:
        return None
    if (lo is not None and seg_lo != lo) or (hi is not None and seg_hi != hi):
        return None
    packed = raw[_HEADER.size :]
    size = seg_hi - seg_lo + 1
    if len(packed) != (size + 7) // 8 or zlib.crc32(packed) != crc:
        return None
    flags = np.unpackbits(np.frombuffer(packed, dtype=np.uint8))[:size].astype(np.uint8)
    seg = SieveSegment(seg_lo, seg_hi, flags)
    rng = random.Random(seg_lo ^ seg_hi)
    for _ in range(SPOT_CHECKS):
        n = rng.randint(seg_lo, seg_hi)
        if bool(flags[n - seg_lo]) != _is_prime_trial(n):
            log.warning("sieve cache %s failed spot check at %d; ignoring", path, n)
            return None
    return seg


def cached_segment(cache_dir: Path, lo: int, hi: int) -> SieveSegment:
    path = segment_path(cache_dir, lo, hi)
    seg = read_segment(path, lo, hi)
    if seg is None:
        seg = sieve(lo, hi)
        try:
            Path(cache_dir).mkdir(parents=True, exist_ok=True)
            write_segment(path, seg)
        except OSError as exc:
            log.warning("cannot write sieve cache %s: %s", path, exc)
    return seg
