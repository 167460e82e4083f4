"""Construction scripts and verification reports.

The script language replays a construction as a sequence of bindings and
assertions; the executor produces a deterministic report with one record per
assertion.  The two bundled scripts cover the full constructions; `exotica
run` and `exotica check-all` expose the same machinery on the command line.
"""

from exotica.cli import bundled_scripts, load_bundled_script, run_text
from exotica.dsl import parse, serialize
from exotica.interpreter import ExecConfig, execute

###############################################################################
# A small script: bindings are single-assignment, assertions carry optional
# budgets and citations, and failures do not stop the run.

source = """\
let G = presentation { gens: a, b; rels: a^2, b^2, a*b*a*b*a*b; }
assert order(G) == 6 cite "symmetric group on three letters"
assert order(G) == 7
assert trivial(G) budget 100
"""
report = execute(parse(source, source_name="demo"))
print(report.to_text())
print("exit code:", report.exit_code())

###############################################################################
# Scripts round-trip through their canonical serialization.

print(serialize(parse(source)))

###############################################################################
# The bundled theorem scripts, and their JSON reports.

for name in bundled_scripts():
    report = run_text(load_bundled_script(name), name, ExecConfig())
    counts = report.summary()
    print(f"{name}: {counts['pass']} pass, {counts['fail']} fail, "
          f"{counts['unknown']} unknown -> exit {report.exit_code()}")

print()
print(run_text(load_bundled_script("theorem_1_2"), "theorem_1_2",
               ExecConfig()).to_json(stable=True)[:400], "...")
