"""Driving the command-line tool from Python.

``classicalseq.cli.main`` takes the same argument list as the shell command
and returns its exit code, which makes it easy to script.
"""

import json
import contextlib
import io

from classicalseq.cli import main


def run(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(io.StringIO()):
        code = main(list(argv))
    return code, buf.getvalue()


code, out = run("gen", "--family", "hermite", "--n", "3")
print(f"gen (exit {code}):\n{out}")

code, out = run("polys", "--family", "laguerre", "--n", "3", "--k", "1")
print(f"polys (exit {code}):\n{out}")

code, out = run("report", "--family", "bessel", "--n", "4", "--no-timing")
rep = json.loads(out)
print(f"report (exit {code}): status={rep['status']}, h={rep['h']}, varpi={rep['varpi']}")

code, out = run("verify", "--family", "delta", "--n", "3", "--no-timing", "--format", "json")
chol = json.loads(out)["checks"]["cholesky"]
print(f"delta verify (exit {code}): {chol['message']}")

code, _ = run("verify", "--a", "0", "--b", "0", "--c", "0", "--d", "1", "--e", "1", "--n", "2")
print(f"phi = 0 is rejected with exit {code}")
