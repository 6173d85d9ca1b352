import csv
import json
import sys
from typing import AnyStr

from flatten_json import flatten
from prettytable import PrettyTable


class Progress:
    """
    Tally of the checks a verification step has run.
    """

    def __init__(self):
        self._total: int = 0
        self._passed: int = 0
        self._failed: int = 0
        self._failures: list = []

    @property
    def total(self) -> int:
        return self._total

    @property
    def passed(self) -> int:
        return self._passed

    @property
    def failed(self) -> int:
        return self._failed

    @property
    def failures(self) -> list:
        return list(self._failures)

    def record(self, name: str, ok: bool) -> bool:
        self._total += 1
        if ok:
            self._passed += 1
        else:
            self._failed += 1
            self._failures.append(name)
        return ok

    @property
    def all_passed(self) -> bool:
        return self._failed == 0

    def to_json(self) -> dict:
        return {"total": self._total, "passed": self._passed, "failed": self._failed}


class FileUtility:
    """
    Utility related to file operations.
    """

    @staticmethod
    def read_file(file: str) -> AnyStr:
        """
        Read file content and return the same.

        Args:
            file: Complete file path to read content from.

        Returns:
            AnyStr: File contents
        """

        with open(file) as f:
            return f.read()

    @staticmethod
    def write_file(file: str, content: AnyStr) -> None:
        with open(file, "w") as f:
            f.write(content)

    @staticmethod
    def read_json_file(file: str) -> dict:
        """
        Read file content and convert it into a dict for easier use.

        Args:
            file: Complete file path to read content from.

        Returns:
            dict: File content as a dict
        """

        return json.loads(FileUtility.read_file(file))

    @staticmethod
    def dumps(content: dict, pretty: bool = False) -> str:
        """
        Canonical JSON text: sorted keys, so equal content gives equal bytes.
        """

        if pretty:
            return json.dumps(content, sort_keys=True, indent=2)
        return json.dumps(content, sort_keys=True, separators=(",", ":"))

    @staticmethod
    def write_json(file: str, content: dict) -> None:
        """
        Write the given content to the file as a json.

        Args:
            file: Complete file path to write content.
            content: Data to write to a file

        Returns:
            None
        """

        FileUtility.write_file(file, FileUtility.dumps(content, pretty=True))

    @staticmethod
    def write_flatten_json(file: str, content: dict) -> None:
        """

        Args:
            file: Complete file path to write content.
            content: Nested json content, flattened with `_` before writing.

        Returns:
            None
        """

        flatten_content = flatten(content, "_")
        FileUtility.write_json(file, flatten_content)

    @staticmethod
    def write_csv(file: str, content: [dict]) -> None:
        """
        Write rows to a CSV file. Nested values are flattened first, and the header
        is the union of the keys in first-seen order.

        Args:
            file: Complete file path to write content.
            content: Rows to write to file.

        Returns:
            None
        """

        if not content:
            return

        rows = [flatten(row, "_") for row in content]
        header = []
        for row in rows:
            for key in row:
                if key not in header:
                    header.append(key)

        with open(file, "w", newline="") as data_file:
            csv_writer = csv.writer(data_file)
            csv_writer.writerow(["Id"] + header)
            for count, row in enumerate(rows, start=1):
                csv_writer.writerow([count] + [row.get(key) for key in header])

    @staticmethod
    def to_table(rows: [dict], title: str = None) -> PrettyTable:
        """
        Render flat rows as a PrettyTable. Nested values are flattened first.

        Args:
            rows: Result rows.
            title: Optional table title.

        Returns:
            PrettyTable
        """

        table = PrettyTable()
        if title:
            table.title = title
        if not rows:
            return table

        flat = [flatten(row, "_") for row in rows]
        header = []
        for row in flat:
            for key in row:
                if key not in header:
                    header.append(key)
        table.field_names = header
        for row in flat:
            table.add_row([row.get(key, "") for key in header])
        return table


class ExecutionUtility:
    """
    Utility related to process exit.
    """

    @staticmethod
    def stop(code: int = 1) -> None:
        """
        Exit with the given status: 0 all checks passed, 1 a check failed, 2 usage error.

        Returns:
            None
        """

        sys.exit(code)
