import os
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
ROOT = os.path.dirname(os.path.dirname(HERE))

# package sources
sys.path.insert(0, os.path.join(ROOT, "python"))
# compiled module from the CMake build tree
module_dir = os.environ.get("MESHFORGE_MODULE_DIR", os.path.join(ROOT, "build"))
os.environ.setdefault("MESHFORGE_MODULE_DIR", module_dir)
