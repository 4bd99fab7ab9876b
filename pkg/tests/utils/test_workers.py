# tests/utils/test_workers.py
import pytest

from hecke_spectra.errors import InvalidParameter
from hecke_spectra.utils.workers import CHUNKS_PER_WORKER, check_threads, chunked, map_chunks

# --- Test Fixtures / Mock Data ---

def square_all(chunk, offset=0):
    return [x * x + offset for x in chunk]


ITEMS = list(range(37))


class TestChunked:
    def test_covers_items_in_order(self):
        for parts in (1, 2, 5, 8, 37, 100):
            chunks = chunked(ITEMS, parts)
            assert [x for chunk in chunks for x in chunk] == ITEMS
            assert 1 <= len(chunks) <= parts
            assert all(chunks)

    def test_empty(self):
        assert chunked([], 4) == []

    def test_bad_part_count(self):
        with pytest.raises(InvalidParameter):
            chunked(ITEMS, 0)


class TestMapChunks:
    def test_in_process(self):
        results = list(map_chunks(square_all, ITEMS, 1, offset=1))
        assert len(results) <= CHUNKS_PER_WORKER
        assert [y for _, part in results for y in part] == [x * x + 1 for x in ITEMS]

    def test_pool_matches_in_process(self):
        single = [y for _, part in map_chunks(square_all, ITEMS, 1) for y in part]
        pooled = list(map_chunks(square_all, ITEMS, 3))
        assert [y for _, part in pooled for y in part] == single
        assert [x for chunk, _ in pooled for x in chunk] == ITEMS

    def test_thread_count_is_checked(self):
        assert check_threads(2) == 2
        with pytest.raises(InvalidParameter):
            check_threads(0)
        with pytest.raises(InvalidParameter):
            list(map_chunks(square_all, ITEMS, -1))
