"""Basic blocks by leader statements, and the block-level flow graph.

Statements are numbered in preorder. Leaders are:

* the first statement;
* any statement control can reach other than by falling through to the
  preorder-next statement (branch targets, loop headers on the back edge,
  join points after an ``if``, the statement after a loop);
* the preorder-next statement of any branch, or of any statement whose
  successor is not its preorder-next (end of a ``then`` body, end of a loop
  body).

A loop header (``while`` or ``for``) is one statement, so the header forms
its own block. ``if`` conditions stay in the block of the statements
preceding them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .ast import BRANCHES, For, If, Program, While


@dataclass(frozen=True)
class BasicBlock:
    id: int
    start: int  # first statement sid
    stop: int  # one past the last statement sid
    first_line: int
    last_line: int

    @property
    def statements(self) -> range:
        return range(self.start, self.stop)

    def __len__(self) -> int:
        return self.stop - self.start


@dataclass(frozen=True)
class ProgramFlowGraph:
    blocks: tuple[BasicBlock, ...]
    edges: tuple[tuple[int, int], ...]
    block_of: tuple[int, ...]  # sid -> block id
    unreachable: frozenset[int]
    entry: int = 0

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(str(b.id) for b in self.blocks)

    def successors(self, k: int) -> list[int]:
        return [b for a, b in self.edges if a == k]


def statement_successors(program: Program) -> list[list[int]]:
    """Per-statement successor sids; ``None`` marks leaving the program."""
    succ: list[list] = [[] for _ in program.statements]

    def first(body, fallback):
        return body[0].sid if body else fallback

    def link(body, follow):
        for i, s in enumerate(body):
            nxt = body[i + 1].sid if i + 1 < len(body) else follow
            if isinstance(s, If):
                out = [first(s.then, nxt), first(s.orelse, nxt)]
                link(s.then, nxt)
                link(s.orelse, nxt)
            elif isinstance(s, (While, For)):
                out = [first(s.body, s.sid), nxt]
                link(s.body, s.sid)
            else:
                out = [nxt]
            succ[s.sid] = list(dict.fromkeys(out))

    link(program.body, None)
    return succ


def find_leaders(program: Program, succ: list[list[int]] | None = None) -> list[int]:
    if succ is None:
        succ = statement_successors(program)
    n = len(program.statements)
    leaders = {0}
    for sid, stmt in enumerate(program.statements):
        nxt = sid + 1 if sid + 1 < n else None
        jumps = False
        for t in succ[sid]:
            if t != nxt:
                jumps = True
                if t is not None:
                    leaders.add(t)
        if (jumps or isinstance(stmt, BRANCHES)) and nxt is not None:
            leaders.add(nxt)
    return sorted(leaders)


def build_cfg(program: Program) -> ProgramFlowGraph:
    succ = statement_successors(program)
    leaders = find_leaders(program, succ)
    bounds = leaders + [len(program.statements)]
    stmts = program.statements

    blocks, block_of = [], []
    for k, (start, stop) in enumerate(zip(bounds, bounds[1:])):
        blocks.append(BasicBlock(k, start, stop, stmts[start].pos.line, stmts[stop - 1].pos.line))
        block_of.extend([k] * (stop - start))

    edges = []
    for b in blocks:
        for t in succ[b.stop - 1]:
            if t is not None:
                edges.append((b.id, block_of[t]))

    seen = {0}
    queue = deque([0])
    while queue:
        k = queue.popleft()
        for a, t in edges:
            if a == k and t not in seen:
                seen.add(t)
                queue.append(t)
    unreachable = frozenset(range(len(blocks))) - seen

    return ProgramFlowGraph(tuple(blocks), tuple(edges), tuple(block_of), unreachable)
