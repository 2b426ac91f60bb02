"""
Driving the command-line interface from Python
==============================================

The same reports are available as ``python -m casas_alvero <command>`` or
the ``casas-alvero`` console script; ``--json PATH`` writes a canonical JSON
document.
"""

import json
import tempfile
from pathlib import Path

from casas_alvero.cli import main

main(["check", "--poly", "x^5 - 5x^4 - 3309x^3 + 3313x^2", "--mod", "8009", "--signed"])
main(["resultant", "--f", "9r^2-16r+4", "--g", "-20r^2+9r+40", "--var", "r"])
main(["hasse", "--poly", "x^5 - x^4", "--order", "3", "--mod", "2"])

with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp) / "verify.json"
    code = main(["verify-paper", "--signed", "--json", str(out)])
    doc = json.loads(out.read_text())
    print("exit code", code, "| items passed", doc["passed"], "of", doc["total"], "| errata", len(doc["errata"]))
