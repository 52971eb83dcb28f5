"""
Progress tracking for the enumeration pipeline.
EnumerationStatus is updated by the pipeline (possibly from a callback
thread) and read by the CLI, which renders it with a rich progress bar.
"""

import threading
import time
from typing import Dict, List, Optional

from rich.console import Console
from rich.progress import (
    BarColumn, MofNCompleteColumn, Progress, SpinnerColumn, TaskID,
    TextColumn, TimeElapsedColumn,
)


class EnumerationStatus:
    """Thread-safe status tracker for one enumeration run."""

    def __init__(self):
        self.lock = threading.Lock()
        self.current_action = "Initializing..."
        self.level = 0
        self.parents_done = 0
        self.parents_total = 0
        self.classes_found = 0
        self.level_counts: Dict[int, int] = {}
        self.start_time: Optional[float] = None
        self.errors: List[str] = []
        self.status = "idle"  # idle, running, completed, error

    def start(self):
        with self.lock:
            self.start_time = time.time()
            self.status = "running"

    def update(self, action: str = None, level: int = None,
               done: int = None, total: int = None, classes: int = None):
        """Update status (thread-safe)."""
        with self.lock:
            if action:
                self.current_action = action
            if level is not None:
                if level != self.level:
                    self.parents_done = 0
                self.level = level
            if done is not None:
                self.parents_done = done
            if total is not None:
                self.parents_total = total
            if classes is not None:
                self.classes_found = classes

    def finish_level(self, level: int, classes: int):
        with self.lock:
            self.level_counts[level] = classes
            self.classes_found = classes

    def add_error(self, message: str):
        with self.lock:
            self.errors.append(message)
            self.status = "error"

    def complete(self):
        with self.lock:
            if self.status != "error":
                self.status = "completed"
            self.current_action = "Done"

    @property
    def elapsed(self) -> float:
        with self.lock:
            if self.start_time is None:
                return 0.0
            return time.time() - self.start_time

    def snapshot(self) -> Dict[str, object]:
        with self.lock:
            return {
                "status": self.status,
                "action": self.current_action,
                "level": self.level,
                "parents_done": self.parents_done,
                "parents_total": self.parents_total,
                "classes_found": self.classes_found,
                "level_counts": dict(self.level_counts),
                "errors": list(self.errors),
            }


class ProgressReporter:
    """
    Mirrors an EnumerationStatus onto a rich Progress bar.

    Pass ``refresh`` as the pipeline's progress callback; each call
    redraws the bar for the current level.
    """

    def __init__(self, status: EnumerationStatus, console: Optional[Console] = None):
        self.status = status
        self.progress = Progress(
            SpinnerColumn(),
            TextColumn("[bold blue]{task.description}"),
            BarColumn(),
            MofNCompleteColumn(),
            TextColumn("{task.fields[classes]} classes"),
            TimeElapsedColumn(),
            console=console,
            transient=True,
        )
        self._task: Optional[TaskID] = None

    def __enter__(self) -> "ProgressReporter":
        self.progress.start()
        self._task = self.progress.add_task("starting", total=None, classes=0)
        return self

    def __exit__(self, *exc) -> None:
        self.progress.stop()

    def refresh(self) -> None:
        snap = self.status.snapshot()
        if self._task is None:
            return
        self.progress.update(
            self._task,
            description=f"k={snap['level']} {snap['action']}",
            completed=snap["parents_done"],
            total=snap["parents_total"] or None,
            classes=snap["classes_found"],
        )
