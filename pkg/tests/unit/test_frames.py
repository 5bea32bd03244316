from ltlc.oracle.frames import *
import numpy as np
import pytest


def test_lasso_frame_needs_a_state():
    with pytest.raises(ValueError):
        LassoFrame(())


def test_lasso_frame_successor_out_of_range():
    with pytest.raises(ValueError):
        LassoFrame((2, 0))


def test_lasso_frame_dict_round_trip(lasso):
    assert LassoFrame.from_dict(lasso.to_dict()) == lasso
    assert lasso.to_dict() == {"n": 3, "succ": [1, 2, 1]}


def test_lasso_frame_from_dict_wrong_n():
    with pytest.raises(ValueError):
        LassoFrame.from_dict({"n": 3, "succ": [0, 0]})


@pytest.mark.parametrize("n_max,expected", [(1, 1), (2, 5), (3, 32), (4, 288)])
def test_enumerate_lasso_frames(n_max, expected):
    frames = list(enumerate_lasso_frames(n_max))
    assert len(frames) == expected
    assert len(set(frames)) == expected
    assert count_lasso_frames(n_max) == expected


def test_enumerate_lasso_frames_order():
    frames = list(enumerate_lasso_frames(2))
    assert [x.succ for x in frames] == [(0,), (0, 0), (0, 1), (1, 0), (1, 1)]


@pytest.mark.parametrize("n_max", [0, 7])
def test_enumerate_lasso_frames_bounds(n_max):
    with pytest.raises(ValueError):
        list(enumerate_lasso_frames(n_max))


def test_path_structure_lasso(lasso):
    ps = path_structure(lasso)
    expected_le = np.array([[1, 1, 1], [0, 1, 1], [0, 1, 1]], dtype=bool)
    assert np.array_equal(ps.le, expected_le)
    assert np.array_equal(ps.lt, expected_le & ~np.eye(3, dtype=bool))
    assert np.array_equal(ps.succ, [1, 2, 1])


def test_path_structure_le_is_not_antisymmetric(two_cycle):
    ps = path_structure(two_cycle)
    assert ps.le[0, 1] and ps.le[1, 0]
    assert ps.lt[0, 1] and ps.lt[1, 0]


def test_path_structure_le_is_a_preorder(chain):
    le = path_structure(chain).le
    assert le.diagonal().all()
    # transitive: le @ le adds no pair
    assert np.array_equal((le.astype(int) @ le.astype(int)) > 0, le)


def test_path_structure_is_read_only(chain):
    ps = path_structure(chain)
    with pytest.raises(ValueError):
        ps.le[0, 0] = False


def test_frames_from():
    frames = list(frames_from([[0], [1, 0]]))
    assert frames == [LassoFrame((0,)), LassoFrame((1, 0))]
