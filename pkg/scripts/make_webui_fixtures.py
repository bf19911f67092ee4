"""Record a scripted CLI flip session as a golden fixture for the web UI tests.

Replays a fixed 10-flip walk on the (2,2) annulus through the command-line
interface, capturing the exact bytes each command prints; the web UI test
suite replays the same session against these recordings.

Writes webui/test/fixtures/golden_22.json (path relative to the repo root).
"""

import io
import json
import os
from contextlib import redirect_stdout

from arcsheaf.cli import main as cli_main

FLIP_SEQUENCE = (0, 2, 1, 3, 0, 1, 2, 0, 3, 1)


def run_cli(argv, payload=None):
    """Run the CLI in-process, returning (exit_code, exact stdout text)."""
    buf = io.StringIO()
    path = None
    if payload is not None:
        path = "/tmp/_fixture_payload.json"
        with open(path, "w") as fh:
            json.dump(payload, fh)
        argv = argv + ["--file", path]
    with redirect_stdout(buf):
        code = cli_main(argv)
    if path is not None:
        os.unlink(path)
    return code, buf.getvalue()


def main() -> None:
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    out_path = os.path.join(root, "webui", "test", "fixtures", "golden_22.json")
    os.makedirs(os.path.dirname(out_path), exist_ok=True)

    code, initial = run_cli(
        ["triangulate", "--p", "2", "--q", "2", "--vertex", "[0,0]"]
    )
    assert code == 0, initial
    report = json.loads(initial)

    steps = []
    for idx in FLIP_SEQUENCE:
        code, out = run_cli(["flip", "--index", str(idx)], payload=report)
        assert code == 0, out
        report = json.loads(out)
        step = {"arc_index": idx, "cli": out}
        if report["vertex"] is not None:
            code, iota_out = run_cli(["iota"], payload=report["triangulation"])
            assert code == 0, iota_out
            step["iota_cli"] = iota_out
        steps.append(step)

    fixture = {"p": 2, "q": 2, "c": [0, 0], "initial": initial, "steps": steps}
    with open(out_path, "w") as fh:
        json.dump(fixture, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {out_path} ({len(steps)} flips)")


if __name__ == "__main__":
    main()
