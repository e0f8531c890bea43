# %% [markdown]
# # From source to verdict with MiniLang
#
# Parse the bundled faulty sort, split it into basic blocks, run the test
# suite with block tracing, and localize.

# %%
from faultblocks import dumps_csv, localize
from faultblocks.data import read_text
from faultblocks.minilang import build_cfg, build_spectrum, parse, parse_suite, run_suite

source = read_text("rational_sort.mini")
program = parse(source)
cfg = build_cfg(program)

lines = source.splitlines()
for b in cfg.blocks:
    print(f"block {b.id}: lines {b.first_line}-{b.last_line}")
    for ln in range(b.first_line, b.last_line + 1):
        print("    " + lines[ln - 1].split("//")[0].rstrip())
print("edges:", cfg.edges)

# %%
cases = parse_suite(read_text("rational_sort.tests"))
traces = run_suite(program, cfg, cases)
for t in traces:
    print(t.name, list(t.hits), "error" if t.error else "ok", repr(t.observed_output))

# %%
spectrum = build_spectrum(traces, cfg.labels)
print(dumps_csv(spectrum))
print(localize(spectrum).to_text())

# %% [markdown]
# A larger suite: more sorted and unsorted inputs. Any run that swaps a pair
# with different denominators fails, so the swap block stays on top.

# %%
import random

from faultblocks.minilang import TestCase
from fractions import Fraction

rng = random.Random(0)
suite = []
for i in range(20):
    n = rng.randint(1, 6)
    pairs = [(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(n)]
    if i % 4 == 0:
        pairs.sort(key=lambda p: Fraction(*p))
    good = sorted(pairs, key=lambda p: Fraction(*p))
    expected = " ".join(str(p[0]) for p in good) + "\n" + " ".join(str(p[1]) for p in good)
    suite.append(TestCase({"number": n, "num": [p[0] for p in pairs], "den": [p[1] for p in pairs]},
                          expected, f"r{i}"))

big = build_spectrum(run_suite(program, cfg, suite), cfg.labels)
print(localize(big, with_baselines=True).to_text())
