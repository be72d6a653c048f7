import psutil

MAX_WORKERS = 8
# Rough resident size of one worker process holding a copy of the tables
WORKER_RAM_BYTES = 256 * 1024 ** 2


def bytes_to_gb(b):
    """Convert bytes to gigabytes with 2 decimal places."""
    return None if b is None else round(b / (1024 ** 3), 2)


def detect_hardware():
    """Detect available CPUs and memory and return system information."""
    memory = psutil.virtual_memory()
    hardware = {
        "cpu_count_logical": psutil.cpu_count(logical=True) or 1,
        "cpu_count_physical": psutil.cpu_count(logical=False),
        "system_ram_bytes": memory.total,
        "available_ram_bytes": memory.available,
    }
    return hardware


# Select worker count based on hardware capabilities
def worker_pick(hardware):
    """Select the number of worker processes for data-parallel engine loops."""
    cores = hardware["cpu_count_physical"] or hardware["cpu_count_logical"]
    if cores <= 2:
        return 1
    by_ram = max(1, hardware["available_ram_bytes"] // WORKER_RAM_BYTES)
    return int(min(cores - 1, by_ram, MAX_WORKERS))


def worker_override(workers, hardware):
    """Validate an explicit worker count."""
    limit = 4 * hardware["cpu_count_logical"]
    if not isinstance(workers, int) or isinstance(workers, bool):
        raise ValueError(f"Invalid worker count '{workers}'")
    if workers < 1:
        raise ValueError("Worker count must be at least 1")
    if workers > limit:
        raise ValueError(f"Worker count {workers} exceeds the limit of {limit} for this machine")
    return workers
