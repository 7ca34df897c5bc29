from __future__ import annotations

import math
import random
import struct

import pytest

from permpuzzle import (
    Board,
    ParseError,
    PatternDatabase,
    PatternHeuristic,
    ResourceLimitError,
    build_pdb,
    load_pdb,
    pdb_heuristic,
    save_pdb,
)

from oracles import exact_distances


class TestBuild:
    def test_full_complement_2x2_table_size(self):
        db = build_pdb(2, 2, [1, 2, 3])
        assert len(db.table) == math.perm(4, 3) == 24

    def test_goal_entry_is_zero(self):
        db = build_pdb(2, 2, [1, 2, 3])
        assert db.lookup(Board.goal(2, 2)) == 0

    def test_full_complement_2x2_is_exact(self):
        # All tiles in one pattern means every move is a counted move.
        db = build_pdb(2, 2, [1, 2, 3])
        for cells, d in exact_distances(2, 2).items():
            assert db.lookup(Board(2, 2, cells)) == d

    def test_3x3_entries_bounded_by_diameter(self):
        db = build_pdb(3, 3, [1, 2, 3])
        assert max(db.table) <= 31

    def test_pattern_tiles_sorted(self):
        db = build_pdb(3, 3, [4, 2, 1])
        assert db.pattern_tiles == (1, 2, 4)

    def test_disjoint_pair_admissible(self, dist_3x3, solvable_3x3_states):
        dbs = [build_pdb(3, 3, [1, 2, 3, 4]), build_pdb(3, 3, [5, 6, 7, 8])]
        rng = random.Random(13)
        for cells in rng.sample(solvable_3x3_states, 500):
            b = Board(3, 3, cells)
            assert pdb_heuristic(b, dbs) <= dist_3x3[cells]

    def test_rejects_blank_label(self):
        with pytest.raises(ValueError):
            build_pdb(3, 3, [1, 9])

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            build_pdb(3, 3, [1, 1])

    def test_rejects_empty_and_oversized_patterns(self):
        with pytest.raises(ValueError):
            build_pdb(3, 3, [])
        with pytest.raises(ValueError):
            build_pdb(4, 4, list(range(1, 10)))

    def test_state_guard(self):
        # P(16,6) placements x 10 blank cells is past the default ceiling.
        with pytest.raises(ResourceLimitError):
            build_pdb(4, 4, [1, 2, 3, 4, 5, 6])


class TestHeuristic:
    def test_goal_is_zero(self):
        dbs = [build_pdb(3, 3, [1, 2, 3, 4]), build_pdb(3, 3, [5, 6, 7, 8])]
        assert pdb_heuristic(Board.goal(3, 3), dbs) == 0

    def test_overlapping_patterns_rejected(self):
        a = build_pdb(3, 3, [1, 2, 3])
        b = build_pdb(3, 3, [3, 4])
        with pytest.raises(ValueError, match="overlap"):
            pdb_heuristic(Board.goal(3, 3), [a, b])

    def test_mixed_dimensions_rejected(self):
        a = build_pdb(3, 3, [1, 2])
        b = build_pdb(2, 2, [1, 2])
        with pytest.raises(ValueError, match="dimensions"):
            PatternHeuristic([a, b])

    def test_board_dimension_mismatch_rejected(self):
        ph = PatternHeuristic([build_pdb(3, 3, [1, 2, 3])])
        with pytest.raises(ValueError):
            ph(Board.goal(2, 2))

    def test_empty_database_list_rejected(self):
        with pytest.raises(ValueError):
            PatternHeuristic([])

    def test_positions_path_matches_board_path(self):
        ph = PatternHeuristic([build_pdb(3, 3, [2, 5, 7])])
        rng = random.Random(3)
        for _ in range(50):
            cells = list(range(1, 10))
            rng.shuffle(cells)
            b = Board(3, 3, tuple(cells))
            position = [0] * 10
            for cell, label in enumerate(cells):
                position[label] = cell
            assert ph(b) == ph.value_from_positions(position)


class TestPersistence:
    def test_round_trip(self, tmp_path):
        db = build_pdb(3, 3, [1, 2, 3, 4])
        path = tmp_path / "p.spdb"
        save_pdb(db, path)
        assert load_pdb(path) == db

    def test_file_bytes_stable(self, tmp_path):
        db = build_pdb(3, 2, [1, 2, 3])
        a, b = tmp_path / "a.spdb", tmp_path / "b.spdb"
        save_pdb(db, a)
        save_pdb(load_pdb(a), b)
        assert a.read_bytes() == b.read_bytes()

    def test_header_layout(self, tmp_path):
        db = build_pdb(3, 2, [2, 4])
        path = tmp_path / "h.spdb"
        save_pdb(db, path)
        raw = path.read_bytes()
        assert raw[:4] == b"SPDB"
        assert raw[4] == 1
        assert (raw[5], raw[6], raw[7]) == (3, 2, 2)
        assert raw[8:10] == bytes([2, 4])
        (length,) = struct.unpack_from("<Q", raw, 10)
        assert length == math.perm(6, 2)
        assert len(raw) == 18 + length

    def test_bad_magic(self, tmp_path):
        path = tmp_path / "bad.spdb"
        path.write_bytes(b"XPDB" + bytes(20))
        with pytest.raises(ParseError, match="magic"):
            load_pdb(path)

    def test_version_mismatch(self, tmp_path):
        db = build_pdb(3, 2, [1, 2])
        path = tmp_path / "v.spdb"
        save_pdb(db, path)
        raw = bytearray(path.read_bytes())
        raw[4] = 2
        path.write_bytes(bytes(raw))
        with pytest.raises(ParseError, match="version"):
            load_pdb(path)

    def test_truncated_table(self, tmp_path):
        db = build_pdb(3, 2, [1, 2])
        path = tmp_path / "t.spdb"
        save_pdb(db, path)
        raw = path.read_bytes()
        path.write_bytes(raw[:-1])
        with pytest.raises(ParseError, match="truncated"):
            load_pdb(path)

    def test_trailing_garbage(self, tmp_path):
        db = build_pdb(3, 2, [1, 2])
        path = tmp_path / "g.spdb"
        save_pdb(db, path)
        path.write_bytes(path.read_bytes() + b"\x00")
        with pytest.raises(ParseError, match="trailing"):
            load_pdb(path)

    def test_declared_length_mismatch(self, tmp_path):
        db = build_pdb(3, 2, [1, 2])
        path = tmp_path / "m.spdb"
        save_pdb(db, path)
        raw = bytearray(path.read_bytes())
        struct.pack_into("<Q", raw, 10, 999)
        path.write_bytes(bytes(raw))
        with pytest.raises(ParseError, match="length"):
            load_pdb(path)

    def test_direct_constructor_validates(self):
        with pytest.raises(ValueError):
            PatternDatabase(3, 3, (1, 2), b"\x00" * 5)
