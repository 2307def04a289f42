import os
import sys

# Under ctest, test the freshly built module rather than an installed copy.
build_dir = os.environ.get("KNOTFORGE_PYTHON_DIR")
if build_dir:
    sys.meta_path[:] = [f for f in sys.meta_path if "knotforge" not in type(f).__module__]
    sys.path.insert(0, build_dir)
