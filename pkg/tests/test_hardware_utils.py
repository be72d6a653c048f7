import pytest

from hardware_utils import bytes_to_gb, worker_override, worker_pick

GB = 1024 ** 3


def machine(logical, physical, available=16 * GB):
    return {
        "cpu_count_logical": logical,
        "cpu_count_physical": physical,
        "system_ram_bytes": 32 * GB,
        "available_ram_bytes": available,
    }


@pytest.mark.parametrize(
    "hardware, expected",
    [
        (machine(16, 8), 7),
        (machine(64, 32), 8),
        (machine(16, None), 8),
        (machine(32, 16, GB // 2), 2),
        (machine(8, 4, 1), 1),
        (machine(4, 2), 1),
    ],
)
def test_worker_pick(hardware, expected):
    assert worker_pick(hardware) == expected


@pytest.mark.parametrize("workers", [0, -1, True, "4", 33])
def test_worker_override_rejects(workers):
    with pytest.raises(ValueError):
        worker_override(workers, machine(8, 4))


def test_worker_override_accepts_up_to_four_per_cpu():
    assert worker_override(32, machine(8, 4)) == 32


def test_bytes_to_gb():
    assert bytes_to_gb(3 * GB // 2) == 1.5
    assert bytes_to_gb(None) is None
