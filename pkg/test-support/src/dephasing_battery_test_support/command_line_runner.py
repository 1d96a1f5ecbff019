import os
import subprocess
import sys
from dataclasses import dataclass
from logging import Logger
from pathlib import Path
from typing import Mapping, Optional, Sequence


@dataclass(frozen=True)
class CommandLineResult:
    exit_code: int
    stdout: str
    stderr: str


class CommandLineRunner:
    """Runs `python -m dephasing_battery` in a child process, the way a user would from a shell."""

    def __init__(self, working_directory: Path, logger: Logger):
        self.__working_directory = working_directory
        self.__logger = logger

    def run(self, arguments: Sequence[str], env_vars: Optional[Mapping[str, str]] = None,
            timeout_seconds: int = 600) -> CommandLineResult:
        command = [sys.executable, '-m', 'dephasing_battery', *arguments]
        self.__logger.info('Executing command: %s', subprocess.list2cmdline(command))

        completed_process = subprocess.run(
            command,
            capture_output=True,
            timeout=timeout_seconds,
            cwd=self.__working_directory,
            env=os.environ | dict(env_vars or {}),
            encoding='utf-8'
        )

        if completed_process.stdout:
            self.__logger.info('Process stdout:\n%s', completed_process.stdout)

        if completed_process.stderr:
            self.__logger.info('Process stderr:\n%s', completed_process.stderr)

        return CommandLineResult(completed_process.returncode, completed_process.stdout, completed_process.stderr)
