import pathlib
import sys

from hypothesis import settings

# allow running straight from a checkout, without installing
_src = pathlib.Path(__file__).resolve().parent.parent / "src"
if str(_src) not in sys.path:
    sys.path.insert(0, str(_src))

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")
