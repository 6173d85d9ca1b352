from pathlib import Path

import cameral

ROOT = Path(__file__).resolve().parent.parent


def test_wheel_version_comes_from_the_package():
    script = (ROOT / "scripts" / "depd-build-install.sh").read_text()
    assert "version=version" in script

    # same expression the generated setup.py evaluates
    init_text = Path(cameral.__file__).read_text()
    assert init_text.split("__version__ = ")[1].split('"')[1] == cameral.__version__
