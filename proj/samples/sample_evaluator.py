#!/usr/bin/env python3
"""Minimal external evaluator for `shapebench run --evaluator`.

Reads one JSON request per line on stdin and writes one reply per line:

    {"id": "3", "params": {...}, "operating_point": {...}}
    {"id": "3", "metrics": {"f": 0.42}}

Replace `evaluate` with a call into your solver. Raising an exception turns
into an error reply, which the harness records as a failed evaluation.
"""

import json
import sys


def evaluate(params, operating_point):
    xs = [v for v in params.values() if isinstance(v, (int, float))]
    return {"f": sum((x - 0.25) ** 2 for x in xs)}


def main():
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        req = json.loads(line)
        try:
            reply = {"id": req["id"], "metrics": evaluate(req["params"], req.get("operating_point", {}))}
        except Exception as exc:  # reported back, the loop keeps serving
            reply = {"id": req.get("id"), "error": str(exc)}
        sys.stdout.write(json.dumps(reply) + "\n")
        sys.stdout.flush()


if __name__ == "__main__":
    main()
