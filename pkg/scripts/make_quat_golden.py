"""Regenerate tests/golden/quat_example.jsonl from the exact quaternion arithmetic."""

from pathlib import Path

from isogeny_descent.experiment_harness import quat_golden_lines

OUT = Path(__file__).resolve().parent.parent / "tests" / "golden" / "quat_example.jsonl"

if __name__ == "__main__":
    OUT.write_text("\n".join(quat_golden_lines()) + "\n")
    print(f"wrote {OUT}")
