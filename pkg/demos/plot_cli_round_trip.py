"""
From the command line and back
==============================

``polysep generate`` writes exact rational coordinates, ``verify`` reads
them back and exits 0 when every mandated check passes.
"""

import os
import tempfile

from polysep.cli import main

workdir = tempfile.mkdtemp()
path = os.path.join(workdir, "c47.json")
main(["generate", "cyclic", "--dim", "4", "--n", "7", "-o", path])
main(["analyze", path])
code = main(["verify", path, "--report", os.path.join(workdir, "report.json")])
print("exit code", code)
