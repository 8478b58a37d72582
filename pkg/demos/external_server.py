"""Drive the sampler from a score model living in another process.

Any process that answers line-delimited JSON on stdin/stdout can serve
scores: a hello handshake agreeing on the dimension, then score
requests carrying (t, z-batch), then shutdown.  This demo first speaks
the protocol by hand so the wire format is visible, then wraps the same
server in ExternalScoreSource and integrates a flow with it.

    python3 demos/external_server.py
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import numpy as np

import diffsense as ds
from diffsense.sources import ExternalScoreSource

CONFIG = """\
[run]
dim = 2
[rho]
weights = [0.6, 0.4]
means = [[-1.0, 0.5], [1.0, -0.5]]
variances = [0.2, 0.3]
"""

cfg_path = Path(tempfile.mkdtemp()) / "server.toml"
cfg_path.write_text(CONFIG)
command = [sys.executable, "-m", "diffsense.score_server",
           "--config", str(cfg_path)]

# --- the protocol by hand -------------------------------------------------
proc = subprocess.Popen(command, stdin=subprocess.PIPE,
                        stdout=subprocess.PIPE, text=True)


def ask(line):
    print(f">> {line}")
    proc.stdin.write(line + "\n")
    proc.stdin.flush()
    reply = proc.stdout.readline().strip()
    print(f"<< {reply}")
    return json.loads(reply)


ask('{"op": "hello", "dim": 2}')
ask('{"op": "score", "t": 0.5, "z": [[0.1, -0.2], [1.0, 1.0]]}')
print('>> {"op": "shutdown"}        (no reply; the server just exits)')
proc.stdin.write('{"op": "shutdown"}\n')
proc.stdin.flush()
proc.wait()

# --- the same server as a drop-in score source ----------------------------
sched = ds.Schedule()
grid = ds.IntegrationGrid.span(sched.t0, sched.t1_trunc, 1e-2)
z0 = np.random.default_rng(0).standard_normal((64, 2))
with ExternalScoreSource(command, dim=2) as src:
    path = ds.sample_ode(src, sched, z0, grid)
print()
print(f"integrated {grid.n_steps} steps through the external source")
print(f"terminal cloud mean: {path.terminal.mean(axis=0).round(3)}")
