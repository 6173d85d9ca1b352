import logging
import os
import sys
from datetime import datetime

# Constants
LOG_DIR = "logs"
LOG_FORMATTER = "%(name)s: %(asctime)s | %(levelname)s | %(filename)s:%(lineno)s | %(process)d >>> %(message)s"

"""
Package logger the library modules log under.
"""
PACKAGE_LOGGER: str = "cameral"


class WorkflowLogger:
    """
    Common logger class
    """

    def __init__(
        self,
        log_name: str,
        working_dir: str,
        log_prefix: str,
        log_level: int,
        log_to_file: bool = True,
    ):
        """
        Args:
            log_name: Name of the logger. The same will be used for log file name also.
            working_dir: Directory under which the `logs` folder is created.
            log_prefix: Sub-folder name under the dated `logs` folder.
            log_level: Log level
            log_to_file: Whether the logs need to be streamed to a file.
        """

        self.log_name = log_name
        self.log_prefix = log_prefix
        self.log_level = log_level
        self.working_dir = working_dir

        self._logger = logging.getLogger(name=log_name)
        self._logger.setLevel(log_level)
        self._logger.propagate = False
        self._close_handlers(self._logger)

        # Library modules log under the package name; route them to the same handlers.
        self._library_logger = logging.getLogger(PACKAGE_LOGGER)
        self._library_logger.setLevel(log_level)
        self._close_handlers(self._library_logger)

        fmt = logging.Formatter(LOG_FORMATTER)

        self.stderr_handler(fmt)

        if log_to_file:
            self._logger.debug("Logging to file")
            self.file_handler(fmt)

    @staticmethod
    def _close_handlers(logger: logging.Logger) -> None:
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
            handler.close()

    def _add_handler(self, handler: logging.Handler, formatter: logging.Formatter) -> None:
        handler.setLevel(self.log_level)
        handler.setFormatter(formatter)
        self._logger.addHandler(handler)
        self._library_logger.addHandler(handler)

    def stderr_handler(self, formatter: logging.Formatter):
        # stdout carries the JSON report only
        self._add_handler(logging.StreamHandler(stream=sys.stderr), formatter)

    def file_handler(self, formatter: logging.Formatter):
        file_name = self.get_log_path()
        self._logger.debug(f"Logging file is {file_name}")
        self._add_handler(logging.FileHandler(file_name), formatter)

    def get_log_path(self) -> str:
        """
        Creates the necessary log directories and subdirectories and returns the log file name.
        Example:
            * Create {working_dir}/logs folder if not already present.
            * Create {working_dir}/logs/YYYY-MM-DD folder if not already present
            * Create {working_dir}/logs/YYYY-MM-DD/{log_prefix} folder if not already present.

        Returns:
            str: Log file path
        """

        current_date = datetime.now().date()
        folder = os.path.join(self.working_dir, LOG_DIR, str(current_date), self.log_prefix)
        os.makedirs(folder, exist_ok=True)

        return os.path.join(folder, f"{self.log_name}.log")

    @property
    def logger(self) -> logging.Logger:
        return self._logger
