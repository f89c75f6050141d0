"""Adapter for external forward/backward programs.

The external program is a long-lived child process speaking a
newline-delimited JSON protocol on stdin/stdout: each request is one line
``{"id": n, "data": <datum>}`` and the matching response is one line
``{"id": n, "data": <datum>}`` on success or ``{"id": n, "error": "..."}``
on failure.  At most one request is in flight per process.  A response
timeout or a dead child yields a program error for that trial and the
child is restarted before the next request.
"""

from __future__ import annotations

import json
import select
import subprocess
import time
from typing import Any, Sequence

from .core import ConfigError, TrialContext

__all__ = ["ExternalProgramError", "ExternalProgram"]

DEFAULT_TIMEOUT = 10.0


class ExternalProgramError(RuntimeError):
    """Failure of an external program for one datum (timeout, crash,
    reported error, or protocol violation)."""


class ExternalProgram:
    """Wraps a child process as a program usable in a suite definition.

    Instances are callable with the ``(value, ctx)`` program signature, so
    one can serve directly as a suite's forward or backward program.  Use
    ``close()`` (or a ``with`` block) to terminate the child.
    """

    def __init__(
        self,
        command: Sequence[str],
        role: str = "forward",
        timeout: float = DEFAULT_TIMEOUT,
    ) -> None:
        if role not in ("forward", "backward"):
            raise ConfigError(f"role must be 'forward' or 'backward', got {role!r}")
        self.command = list(command)
        self.role = role
        self.timeout = timeout
        self._next_id = 1
        self._child: subprocess.Popen | None = None
        self._buffer = b""
        self._spawn()

    # -- process management -------------------------------------------------

    def _spawn(self) -> None:
        try:
            self._child = subprocess.Popen(
                self.command,
                stdin=subprocess.PIPE,
                stdout=subprocess.PIPE,
                text=False,
            )
        except OSError as exc:
            raise ConfigError(f"cannot start external program {self.command!r}: {exc}") from exc
        self._buffer = b""

    def _kill(self) -> None:
        if self._child is not None:
            self._child.kill()
            self._child.wait()
            self._child = None

    def close(self) -> None:
        self._kill()

    def __enter__(self) -> "ExternalProgram":
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()

    # -- protocol -----------------------------------------------------------

    def _read_line(self, deadline_timeout: float) -> bytes:
        deadline = time.monotonic() + deadline_timeout
        stdout = self._child.stdout
        while b"\n" not in self._buffer:
            remaining = deadline - time.monotonic()
            if remaining <= 0:
                raise ExternalProgramError(
                    f"external program timed out after {deadline_timeout}s"
                )
            ready, _, _ = select.select([stdout], [], [], remaining)
            if not ready:
                continue
            chunk = stdout.read1(65536)
            if not chunk:
                raise ExternalProgramError("external program closed its output")
            self._buffer += chunk
        line, _, self._buffer = self._buffer.partition(b"\n")
        return line

    def __call__(self, value: Any, ctx: TrialContext | None = None) -> Any:
        if self._child is None or self._child.poll() is not None:
            self._spawn()
        request_id = self._next_id
        self._next_id += 1
        request = json.dumps({"id": request_id, "data": value}) + "\n"
        try:
            self._child.stdin.write(request.encode("utf-8"))
            self._child.stdin.flush()
            line = self._read_line(self.timeout)
        except ExternalProgramError:
            # Restart so the next trial gets a clean child.
            self._kill()
            self._spawn()
            raise
        except (BrokenPipeError, OSError) as exc:
            self._kill()
            self._spawn()
            raise ExternalProgramError(f"external program pipe failed: {exc}") from exc

        try:
            response = json.loads(line.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            self._kill()
            self._spawn()
            raise ExternalProgramError(f"malformed response line: {line!r}") from exc
        if not isinstance(response, dict) or response.get("id") != request_id:
            self._kill()
            self._spawn()
            raise ExternalProgramError(f"response does not match request id: {response!r}")
        if "error" in response:
            raise ExternalProgramError(f"external program error: {response['error']}")
        if "data" not in response:
            raise ExternalProgramError(f"response carries neither data nor error: {response!r}")
        return response["data"]
