# src/hecke_spectra/utils/workers.py
"""
Chunked fan-out over a process pool.

Work is cut into contiguous chunks and the results come back in chunk order, so a caller that
merges them in that order gets the same answer for every worker count.
"""
import functools
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Iterator, List, Sequence, Tuple, TypeVar

from ..errors import InvalidParameter

_logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

CHUNKS_PER_WORKER = 4


def check_threads(threads: int) -> int:
    if threads < 1:
        raise InvalidParameter(f"Worker count must be positive, got {threads}.", threads=threads)
    return threads


def chunked(items: Sequence[T], parts: int) -> List[Sequence[T]]:
    """At most ``parts`` nonempty contiguous slices covering ``items`` in order."""
    if parts < 1:
        raise InvalidParameter(f"Cannot split work into {parts} parts.")
    if not items:
        return []
    size = -(-len(items) // parts)
    return [items[i:i + size] for i in range(0, len(items), size)]


def map_chunks(worker: Callable[..., R], items: Sequence[T], threads: int = 1,
               **kwargs: Any) -> Iterator[Tuple[Sequence[T], R]]:
    """
    Yields ``(chunk, worker(chunk, **kwargs))`` in chunk order. One worker runs the chunks in
    this process; more use a ProcessPoolExecutor, so ``worker`` and ``kwargs`` must pickle.
    """
    check_threads(threads)
    chunks = chunked(items, threads * CHUNKS_PER_WORKER)
    call = functools.partial(worker, **kwargs)
    if threads == 1 or len(chunks) <= 1:
        for chunk in chunks:
            yield chunk, call(chunk)
        return
    _logger.debug("%d chunks over %d worker processes", len(chunks), threads)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        yield from zip(chunks, pool.map(call, chunks))
