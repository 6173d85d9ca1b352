import logging
import os

from cameral.lib.logger import PACKAGE_LOGGER, WorkflowLogger


def test_log_file_is_dated(tmp_path):
    workflow = WorkflowLogger("rootdata", str(tmp_path), "cameral", logging.INFO)
    workflow.logger.info("hello")
    path = workflow.get_log_path()
    assert path.startswith(os.path.join(str(tmp_path), "logs"))
    assert path.endswith(os.path.join("cameral", "rootdata.log"))
    assert os.path.isfile(path)


def test_reinitialising_closes_previous_handlers(tmp_path):
    first = WorkflowLogger("rootdata", str(tmp_path), "cameral", logging.INFO)
    (file_handler,) = [h for h in first.logger.handlers if isinstance(h, logging.FileHandler)]

    second = WorkflowLogger("rootdata", str(tmp_path), "cameral", logging.INFO, log_to_file=False)
    assert file_handler.stream is None
    assert file_handler not in second.logger.handlers
    assert file_handler not in logging.getLogger(PACKAGE_LOGGER).handlers


def test_library_modules_share_the_step_handlers(tmp_path):
    workflow = WorkflowLogger("hitchin", str(tmp_path), "cameral", logging.DEBUG, log_to_file=False)
    assert logging.getLogger(PACKAGE_LOGGER).handlers == workflow.logger.handlers
