from unifamily import grid
from unifamily.exactnum import make_root_of_unity


def test_grid_shape():
    assert len(list(grid.unified_points())) == 3 * 2 * 2 * 4
    assert len(list(grid.twisted_points())) == 48 * 3 * 3
    betas = grid.grid_betas()
    assert betas[2] == make_root_of_unity(3, 1) and betas[3] == -1
    assert [c.modulus for c in grid.grid_characters()] == [1, 2, 3, 3]


def test_parallel_order_is_deterministic():
    serial = grid.run_identity("symmetry", n_max=3, jobs=1)
    parallel = grid.run_identity("symmetry", n_max=3, jobs=3)
    assert [r.to_dict() for r in serial] == [r.to_dict() for r in parallel]


def test_skips_are_reported_with_reason():
    reports = grid.run_identity("binomial", n_max=2)
    skipped = [r for r in reports if r.status == "skipped"]
    assert skipped and all(r.notes and "degree" in r.notes[0] for r in skipped)
    assert all(r.status in ("pass", "skipped") for r in reports)


def test_unknown_identity():
    import pytest

    with pytest.raises(ValueError):
        grid.run_identity("nope")
