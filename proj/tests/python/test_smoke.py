"""Smoke tests for the sytbij python module. Runs standalone or under pytest."""

import math

import sytbij


def test_counting():
    assert sytbij.count_syt([4, 3, 2]) == 168
    assert sytbij.count_syt([]) == 1
    assert sytbij.count_syt([2, 1]) == len(sytbij.enumerate_syt([2, 1]))
    assert sytbij.enumerate_syt([2, 1]) == [[[1, 2], [3]], [[1, 3], [2]]]
    assert sytbij.partitions(10).count([3, 3, 2, 2]) == 1
    assert len(sytbij.partitions(10)) == 42
    assert sytbij.hook_partitions(1, 1, 3) == [[3], [2, 1], [1, 1, 1]]
    assert sytbij.plus_one([3, 3, 2, 2]) == [4, 3, 2, 2]
    assert sytbij.in_hook([4, 1, 1, 1], 1, 1, 7)


def test_validation_errors():
    for bad in ([2, 3], [0]):
        try:
            sytbij.count_syt(bad)
        except ValueError:
            pass
        else:
            raise AssertionError(f"count_syt({bad}) should raise")
    assert sytbij.is_standard([[1, 2, 4, 6], [3, 5, 7], [8, 9]])
    assert not sytbij.is_standard([[2, 4, 8, 9, 10], [1, 3, 5, 6, 7]])


def test_worked_example():
    array = [[2, 4, 8, 9, 10], [1, 3, 5, 6, 7]]
    first, second = sytbij.to_hook_pair(array)
    assert first == [[1, 3, 5], [2], [4], [6]]
    assert second == [[1, 2, 3], [4], [5], [6]]
    assert sytbij.from_hook_pair(first, second) == array

    tableau = sytbij.to_two_row_syt(array)
    assert tableau == [[1, 3, 5, 6, 7, 8, 9, 10], [2, 4]]
    assert sytbij.from_two_row_syt(tableau) == array

    steps = sytbij.trace(array)
    assert [s["pivot"] for s in steps["steps"]] == [1, 4, 1]
    assert steps["tableau"] == {"rows": tableau}


def test_round_trips():
    for n in range(1, 5):
        for array in sytbij.enumerate_arrays(n):
            first, second = sytbij.to_hook_pair(array)
            assert sytbij.from_hook_pair(first, second) == array
            assert sytbij.from_two_row_syt(sytbij.to_two_row_syt(array)) == array
    for n in range(0, 4):
        for array in sytbij.enumerate_arrays(n, mode="remark"):
            first, second = sytbij.to_hook_pair(array)
            assert sytbij.from_hook_pair(first, second) == array


def test_steps():
    state, pivot = sytbij.forward_step([[2, 4, 8, 9, 10], [1, 3, 5, 6, 7]])
    assert pivot == 1
    assert state == [[1, 2, 4, 8, 9, 10], [3, 5, 6, 7]]
    assert sytbij.inverse_step(state) == [[2, 4, 8, 9, 10], [1, 3, 5, 6, 7]]


def test_identity_and_certification():
    for n in range(1, 7):
        lhs, rhs = sytbij.identity_sides(n)
        assert lhs == rhs == math.comb(2 * n, n)

    report = sytbij.certify(4)
    assert report["bijection1_ok"] and report["bijection2_ok"] and report["composition_ok"]
    assert report["lhs"] == report["rhs"] == report["array_count"] == 70
    assert sum(report["step_histogram"].values()) == 70

    remark = sytbij.certify_remark(2)
    assert remark["rhs_hook_weight"] == 3
    assert remark["rhs_indexing"] == "H(1,1;n+1)"
    assert remark["lhs"] == remark["rhs"] == 10
    assert sytbij.remark_matching_weights(2) == [3]


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"ok {name}")
    print("smoke tests passed")
