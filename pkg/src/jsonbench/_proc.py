"""Child-process plumbing shared by external codecs and compressors."""

import subprocess
import threading

DEFAULT_TIMEOUT = 30.0

_cap_lock = threading.Lock()
_slots = threading.BoundedSemaphore(8)


class ProcessError(RuntimeError):
    pass


def set_process_cap(n: int) -> None:
    """Limit how many child processes may run at the same time."""
    global _slots
    if n < 1:
        raise ValueError("process cap must be at least 1")
    with _cap_lock:
        _slots = threading.BoundedSemaphore(n)


def pipe(argv, data: bytes, timeout: float = DEFAULT_TIMEOUT) -> bytes:
    """Feed ``data`` to ``argv`` on stdin and return its stdout.

    Raises ProcessError on spawn failure, timeout or a nonzero exit.
    """
    slots = _slots
    with slots:
        try:
            proc = subprocess.run(list(argv), input=data, capture_output=True,
                                  timeout=timeout, check=False)
        except FileNotFoundError:
            raise ProcessError(f"cannot spawn {argv[0]!r}: not found") from None
        except PermissionError:
            raise ProcessError(f"cannot spawn {argv[0]!r}: permission denied") from None
        except subprocess.TimeoutExpired:
            raise ProcessError(f"{argv[0]!r} timed out after {timeout:g}s") from None
    if proc.returncode != 0:
        detail = proc.stderr.decode("utf-8", "replace").strip().splitlines()
        tail = f": {detail[-1]}" if detail else ""
        raise ProcessError(f"{argv[0]!r} exited with status {proc.returncode}{tail}")
    return proc.stdout
