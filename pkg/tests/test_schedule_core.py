import pytest

from chainsched import (Allocation, Schedule, TaskSystem, check_schedule,
                        criticality, lower_bound, metrics, read_schedule,
                        schedule_lcf, schedule_lcmpf, write_schedule)
from chainsched.schedule_core import (InvalidScheduleError,
                                      ScheduleFormatError, slot_waste,
                                      task_label)
from sweeps import seeded_instances

from chainsched import ChainClass, schedule as run_algo


class TestLowerBound:
    def test_worked_example(self, sys16_split):
        # total work 114 on 16 processors, longest chain 5
        assert lower_bound(sys16_split) == 8

    def test_chain_length_dominates(self):
        assert lower_bound(TaskSystem(4, ((1, 1, 1),), False)) == 3

    def test_work_dominates(self):
        system = TaskSystem(4, ((4,),) * 6, False)
        assert lower_bound(system) == 6


class TestCriticality:
    def test_suffix_sums(self):
        system = TaskSystem(10, ((3, 5, 2),), False)
        assert criticality(system) == ((10, 7, 2),)

    def test_single_task(self):
        assert criticality(TaskSystem(10, ((7,),), False)) == ((7,),)

    def test_uniform_progression(self):
        assert criticality(TaskSystem(16, ((4, 4, 4, 4),), False)) == \
            ((16, 12, 8, 4),)

    def test_recurrence(self):
        for _, system in seeded_instances(ChainClass.ARBITRARY, False, 50, 0):
            table = criticality(system)
            for chain, cv in zip(system.chains, table):
                assert cv[-1] == chain[-1]
                for j in range(len(chain) - 1):
                    assert cv[j] - cv[j + 1] == chain[j]


class TestCheckSchedule:
    def test_lcf_output_ok(self, sys16_nonsplit):
        sched = schedule_lcf(sys16_nonsplit)
        assert check_schedule(sys16_nonsplit, sched).ok

    def test_precedence_violation(self):
        system = TaskSystem(4, ((2, 2),), False)
        sched = Schedule(((Allocation(0, 1, 2),), (Allocation(0, 0, 2),)))
        report = check_schedule(system, sched)
        assert any("before task 0 finishes" in v for v in report.violations)

    def test_capacity_violation(self):
        system = TaskSystem(4, ((3,), (2,)), False)
        sched = Schedule(((Allocation(0, 0, 3), Allocation(1, 0, 2)),))
        report = check_schedule(system, sched)
        assert any("capacity exceeded (5 > 4)" in v for v in report.violations)

    def test_incomplete_allocation(self):
        system = TaskSystem(4, ((3, 1),), False)
        sched = Schedule(((Allocation(0, 0, 3),),))
        report = check_schedule(system, sched)
        assert any("allocated 0 of 1" in v for v in report.violations)

    def test_split_rejected_in_nonsplitable_mode(self):
        system = TaskSystem(4, ((4,),), False)
        sched = Schedule(((Allocation(0, 0, 2),), (Allocation(0, 0, 2),)))
        report = check_schedule(system, sched)
        assert any("split across slots" in v for v in report.violations)
        assert check_schedule(TaskSystem(4, ((4,),), True), sched).ok

    def test_empty_trailing_slot(self):
        system = TaskSystem(4, ((2,),), False)
        sched = Schedule(((Allocation(0, 0, 2),), ()))
        report = check_schedule(system, sched)
        assert any("empty trailing slot" in v for v in report.violations)


class TestMetrics:
    def test_worked_example_slot_wastes(self, sys16_split, sys16_nonsplit):
        lcmpf = schedule_lcmpf(sys16_split)
        assert slot_waste(sys16_split, lcmpf.slots[0]) == 0
        lcf = schedule_lcf(sys16_nonsplit)
        assert slot_waste(sys16_nonsplit, lcf.slots[0]) == 2

    def test_rejects_invalid_schedule(self):
        system = TaskSystem(4, ((3, 1),), False)
        with pytest.raises(InvalidScheduleError):
            metrics(system, Schedule(((Allocation(0, 0, 3),),)))

    def test_conservation_and_lb_over_sweeps(self):
        for chain_class in (ChainClass.UNIFORM, ChainClass.ARBITRARY):
            for splitable in (False, True):
                algo = "lcmpf" if splitable else "lcf"
                for _, system in seeded_instances(chain_class, splitable,
                                                  40, 200):
                    m = metrics(system, run_algo(system, algo))
                    assert m.makespan * system.processors == \
                        system.total_work + m.total_waste
                    assert m.makespan >= m.lower_bound
                    assert m.ratio == m.makespan / m.lower_bound
                    assert m.avg_waste == m.total_waste / system.processors


class TestScheduleFormat:
    def test_round_trip(self, sys16_nonsplit):
        sched = schedule_lcf(sys16_nonsplit)
        m = metrics(sys16_nonsplit, sched)
        assert read_schedule(write_schedule(sched, m)) == sched
        assert read_schedule(write_schedule(sched)) == sched

    def test_parse_errors_name_fields(self):
        with pytest.raises(ScheduleFormatError, match="slots"):
            read_schedule('{"x": 1}')
        with pytest.raises(ScheduleFormatError, match="procs"):
            read_schedule('{"slots": [[{"chain": 0, "task": 0}]]}')


def test_task_label_is_one_based():
    assert task_label(2, 0) == "T31"
