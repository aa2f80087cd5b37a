"""Workload text format, replay sessions, and differential comparison.

A workload file is line-oriented: a header ``n <count>`` followed by one
command per line, whitespace-separated decimal integers for arguments.
The same workload can be replayed against the engine, the oracle, or both
at once; in the latter case outputs are compared per command and the
first mismatch is reported with its op index.

Two outputs are representation-dependent and compared semantically rather
than textually: ``root`` may be any node on the component's cycle, and
``lca`` may be any cycle node whenever the two walks only merge on the
cycle. Everything else (including rendered error messages) must match
byte for byte.
"""

from dataclasses import dataclass, field
from typing import Optional

from .errors import JumpgraphError, WorkloadParseError
from .oracle import NaiveGraph
from .pathconn import PathConn
from .pseudoforest import Pseudoforest
from .rng import SplitMix64

# command name -> argument count
ARITY = {
    "update": 2,
    "query": 2,
    "succ": 1,
    "cyclen": 1,
    "oncycle": 1,
    "inv": 2,
    "lca": 2,
    "prox": 1,
    "delete": 1,
    "subdivide": 1,
    "root": 1,
    "pc_add": 2,
    "pc_del": 2,
    "pc_conn": 2,
}


@dataclass(frozen=True)
class Command:
    name: str
    args: tuple
    line_no: int = 0


@dataclass
class Workload:
    n: int
    commands: list

    def to_text(self) -> str:
        lines = [f"n {self.n}"]
        lines.extend(f"{c.name} {' '.join(str(a) for a in c.args)}".rstrip() for c in self.commands)
        return "\n".join(lines) + "\n"

    def prefix(self, length: int) -> "Workload":
        return Workload(self.n, self.commands[:length])


def parse_workload(text: str) -> Workload:
    lines = text.splitlines()
    n = None
    header_seen = False
    commands = []
    for line_no, raw in enumerate(lines, start=1):
        tokens = raw.split()
        if not tokens:
            continue
        if not header_seen:
            if tokens[0] != "n" or len(tokens) != 2:
                raise WorkloadParseError(line_no, "expected header 'n <count>'")
            n = _parse_count(tokens[1], line_no)
            header_seen = True
            continue
        name = tokens[0]
        if name not in ARITY:
            raise WorkloadParseError(line_no, f"unknown command '{name}'")
        want = ARITY[name]
        if len(tokens) - 1 != want:
            raise WorkloadParseError(
                line_no, f"'{name}' takes {want} arguments, got {len(tokens) - 1}"
            )
        args = tuple(_parse_count(t, line_no) for t in tokens[1:])
        commands.append(Command(name, args, line_no))
    if not header_seen:
        raise WorkloadParseError(1, "missing header 'n <count>'")
    return Workload(n, commands)


def _parse_count(token: str, line_no: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise WorkloadParseError(line_no, f"not a number: '{token}'") from None
    if value < 0:
        raise WorkloadParseError(line_no, f"negative value: '{token}'")
    return value


def _fmt(value) -> str:
    if value is None:
        return "none"
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


class Session:
    """One backend (engine or oracle) plus its connectivity facade,
    executing parsed commands and rendering outputs."""

    def __init__(self, graph):
        self.graph = graph
        self.pc = PathConn(backend=graph)

    def execute(self, cmd: Command) -> Optional[str]:
        """Output line for cmd, or None for silent success. Precondition
        violations render as deterministic 'error ...' lines."""
        g = self.graph
        a = cmd.args
        try:
            name = cmd.name
            if name == "update":
                g.update(a[0], a[1])
                return None
            if name == "query":
                return _fmt(g.query(a[0], a[1]))
            if name == "succ":
                return _fmt(g.succ(a[0]))
            if name == "cyclen":
                return _fmt(g.cycle_length(a[0]))
            if name == "oncycle":
                return _fmt(g.on_cycle(a[0]))
            if name == "inv":
                return _fmt(g.inverse_query(a[0], a[1]))
            if name == "lca":
                return _fmt(g.lca(a[0], a[1]))
            if name == "prox":
                return _fmt(g.cycle_proximity(a[0]))
            if name == "delete":
                g.delete(a[0])
                return None
            if name == "subdivide":
                return _fmt(g.subdivide(a[0]))
            if name == "root":
                return _fmt(g.component_root(a[0]))
            if name == "pc_add":
                self.pc.add_edge(a[0], a[1])
                return None
            if name == "pc_del":
                self.pc.remove_edge(a[0], a[1])
                return None
            if name == "pc_conn":
                return _fmt(self.pc.connected(a[0], a[1]))
            raise AssertionError(f"unhandled command {name}")
        except JumpgraphError as e:
            return f"error {e}"


def run_workload(workload: Workload, graph) -> list:
    """Replay against one backend; returns the output lines."""
    session = Session(graph)
    lines = []
    for cmd in workload.commands:
        out = session.execute(cmd)
        if out is not None:
            lines.append(out)
    return lines


@dataclass
class DiffOutcome:
    ok: bool
    lines: list = field(default_factory=list)
    index: Optional[int] = None  # op index of the first mismatch
    command: Optional[Command] = None
    engine_out: Optional[str] = None
    oracle_out: Optional[str] = None

    def describe(self) -> str:
        cmd = self.command
        args = " ".join(str(a) for a in cmd.args)
        return (
            f"DIVERGENCE at op {self.index} (line {cmd.line_no}): {cmd.name} {args}\n"
            f"  engine: {_fmt(self.engine_out)}\n"
            f"  oracle: {_fmt(self.oracle_out)}"
        )


def _outputs_agree(cmd: Command, eng: Optional[str], orc: Optional[str], oracle_graph) -> bool:
    if eng == orc:
        return True
    if eng is None or orc is None:
        return False
    if eng.startswith("error") or orc.startswith("error"):
        return False
    if cmd.name == "root":
        # Any node on the component's cycle is a valid root.
        return eng.isdigit() and int(eng) in oracle_graph.cycle_nodes(cmd.args[0])
    if cmd.name == "lca":
        m = oracle_graph.meet(cmd.args[0], cmd.args[1])
        if m is None:
            return eng == "none"
        kind, val = m
        if kind == "tail":
            return eng == str(val)
        return eng.isdigit() and int(eng) in val
    return False


def run_diff(workload: Workload, engine=None, oracle=None) -> DiffOutcome:
    """Replay against engine and oracle in lockstep; stop at the first
    disagreement. Engine output lines are collected (they are what a plain
    engine run would print)."""
    eng_sess = Session(engine if engine is not None else Pseudoforest(workload.n))
    orc_sess = Session(oracle if oracle is not None else NaiveGraph(workload.n))
    lines = []
    for i, cmd in enumerate(workload.commands):
        e = eng_sess.execute(cmd)
        o = orc_sess.execute(cmd)
        if not _outputs_agree(cmd, e, o, orc_sess.graph):
            return DiffOutcome(
                ok=False, lines=lines, index=i, command=cmd, engine_out=e, oracle_out=o
            )
        if e is not None:
            lines.append(e)
    return DiffOutcome(ok=True, lines=lines)


# -- workload generation ------------------------------------------------------

DEFAULT_MIX = {
    "update": 30,
    "query": 20,
    "succ": 5,
    "cyclen": 5,
    "oncycle": 5,
    "inv": 10,
    "lca": 10,
    "prox": 5,
    "root": 5,
    "subdivide": 3,
    "delete": 2,
}

PATH_MIX = {"pc_add": 40, "pc_del": 20, "pc_conn": 40}

HUGE_K = 1 << 62


def parse_mix(text: str) -> dict:
    """'update=30,query=20,...' -> weight dict. Zero weights are allowed
    and disable the op."""
    mix = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        name, _, weight = part.partition("=")
        if name not in ARITY:
            raise ValueError(f"unknown op in mix: '{name}'")
        try:
            mix[name] = int(weight)
        except ValueError:
            raise ValueError(f"bad weight for '{name}': '{weight}'") from None
        if mix[name] < 0:
            raise ValueError(f"negative weight for '{name}'")
    if not mix or all(w == 0 for w in mix.values()):
        raise ValueError("mix has no positive weights")
    return mix


def _pick_weighted(rng: SplitMix64, names, weights, total) -> str:
    roll = rng.below(total)
    acc = 0
    for name, w in zip(names, weights):
        acc += w
        if roll < acc:
            return name
    raise AssertionError("weights exhausted")


def generate_workload(seed: int, n: int, ops: int, mix: dict = None) -> Workload:
    """Random successor-graph workload. Every emitted command references
    live ids only and satisfies its preconditions (deletes are aimed at
    indegree-0 nodes), so a correct engine produces no error lines.

    A NaiveGraph tracks liveness/indegree during generation; the ids it
    allocates for subdivide are the same ones any replay will allocate.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    mix = dict(DEFAULT_MIX if mix is None else mix)
    if any(name in PATH_MIX for name in mix):
        if not all(name in PATH_MIX for name in mix):
            raise ValueError("pc_* ops cannot be mixed with graph ops")
        return generate_path_workload(seed, n, ops, mix)
    names = [name for name, w in mix.items() if w > 0]
    weights = [mix[name] for name in names]
    total = sum(weights)
    rng = SplitMix64(seed)
    tracker = NaiveGraph(n)
    live = list(range(n))

    def pick_live():
        return live[rng.below(len(live))]

    commands = []
    rerolls = 0
    while len(commands) < ops:
        name = _pick_weighted(rng, names, weights, total)
        if name == "update":
            v, w = pick_live(), pick_live()
            tracker.update(v, w)
            args = (v, w)
        elif name == "query":
            v = pick_live()
            k = rng.below(4 * tracker.size + 1) if rng.chance(1, 2) else rng.below(HUGE_K)
            args = (v, k)
        elif name in ("succ", "cyclen", "oncycle", "prox", "root"):
            args = (pick_live(),)
        elif name in ("inv", "lca"):
            args = (pick_live(), pick_live())
        elif name == "subdivide":
            x = pick_live()
            y = tracker.subdivide(x)
            live.append(y)
            args = (x,)
        elif name == "delete":
            candidates = [v for v in live if tracker.indegree(v) == 0]
            if not candidates:
                # Reroll; self-loop-heavy states may have no deletable node.
                rerolls += 1
                if rerolls > 1000:
                    raise ValueError("no deletable node and mix allows nothing else")
                continue
            v = candidates[rng.below(len(candidates))]
            tracker.delete(v)
            live.remove(v)
            args = (v,)
        else:
            raise AssertionError(name)
        rerolls = 0
        commands.append(Command(name, args, line_no=len(commands) + 2))
    return Workload(n, commands)


class PathOpGen:
    """Stateful generator of valid path-connectivity ops: keeps every
    component a simple directed path while emitting add/del/conn steps."""

    def __init__(self, seed: int, n: int, mix: dict = None):
        if n < 2:
            raise ValueError("n must be at least 2")
        self.rng = SplitMix64(seed)
        self.n = n
        self.succ = list(range(n))
        self.indeg = [0] * n  # non-self incoming edges
        mix = dict(PATH_MIX if mix is None else mix)
        self.names = [name for name, w in mix.items() if w > 0]
        self.weights = [mix[name] for name in self.names]
        self.total = sum(self.weights)

    def _terminal(self, v) -> int:
        while self.succ[v] != v:
            v = self.succ[v]
        return v

    def edges(self):
        return [(v, self.succ[v]) for v in range(self.n) if self.succ[v] != v]

    def next_op(self):
        """(name, args) for one valid op. Falls back across op kinds (never
        outside the mix) when the preferred kind has no legal move."""
        rng = self.rng
        preferred = _pick_weighted(rng, self.names, self.weights, self.total)
        order = [preferred] + [x for x in self.names if x != preferred]
        for name in order:
            if name == "pc_conn":
                return name, (rng.below(self.n), rng.below(self.n))
            if name == "pc_add":
                for _ in range(32):
                    v, w = rng.below(self.n), rng.below(self.n)
                    if v != w and self.succ[v] == v and self.indeg[w] == 0 and self._terminal(w) != v:
                        self.succ[v] = w
                        self.indeg[w] += 1
                        return name, (v, w)
            elif name == "pc_del":
                edges = self.edges()
                if edges:
                    v, w = edges[rng.below(len(edges))]
                    self.succ[v] = v
                    self.indeg[w] -= 1
                    return name, (v, w)
        raise ValueError("no legal path op available for this mix")


def generate_path_workload(seed: int, n: int, ops: int, mix: dict = None) -> Workload:
    gen = PathOpGen(seed, n, mix)
    commands = []
    for i in range(ops):
        name, args = gen.next_op()
        commands.append(Command(name, args, line_no=i + 2))
    return Workload(n, commands)


# -- fuzzing --------------------------------------------------------------------

@dataclass
class FuzzResult:
    ok: bool
    seed: int
    workload: Workload
    diff: DiffOutcome
    failing_prefix: Optional[Workload] = None

    def describe(self) -> str:
        if self.ok:
            return f"OK seed={self.seed} ops={len(self.workload.commands)}"
        return (
            f"{self.diff.describe()}\n"
            f"minimized failing workload ({len(self.failing_prefix.commands)} ops):\n"
            f"{self.failing_prefix.to_text()}"
        )


def fuzz(seed: int, n: int, ops: int, mix: dict = None, engine=None, oracle=None) -> FuzzResult:
    """Generate a random workload, replay it against both backends, and
    report either OK or the shortest failing prefix (the prefix ending at
    the first divergent op reproduces the divergence on replay)."""
    workload = generate_workload(seed, n, ops, mix)
    diff = run_diff(workload, engine=engine, oracle=oracle)
    if diff.ok:
        return FuzzResult(True, seed, workload, diff)
    return FuzzResult(False, seed, workload, diff, workload.prefix(diff.index + 1))
