import itertools, sys, time
import numpy as np
from pysat.solvers import Cadical153
from ca import fixpoint

class Family:
    """Wire geometry for a neighbourhood.  All offsets relative to path col X / path row Y."""
    def __init__(self, SN, SE, vfrozen, hrows, hseg):
        self.SN, self.SE = list(SN), list(SE)
        self.K = len(SN) + len(SE); self.T = self.K // 2 + 1
        self.vfrozen = vfrozen      # column offsets (east of path col) frozen in vertical wire
        self.hrows = hrows          # row offsets (north of path row) frozen in horizontal wire
        self.hseg = hseg            # function dx -> bool: bar present at column X+dx
        self.rN, self.rE = max(SN), max(SE)

def contiguous(kE, kN):
    a = (kE + kN) // 2; b = kE - a
    return Family(range(1, kN+1), range(1, kE+1), list(range(b+1, b+a+1)), list(range(1, kN+1)),
                  lambda dx: ((dx - 1) % kE) >= b)

def sparse(iE, jE, iN, jN):
    return Family([iN, jN], [iE, jE], [iE, jE], [iN, jN], lambda dx: True)

class Tile:
    def __init__(self, fam, W, H, X, Y, ports, window=None):
        self.fam, self.W, self.H, self.X, self.Y = fam, W, H, X, Y
        self.ports = ports      # subset of 'NESW'
        self.window = window    # (x0,x1,y0,y1) inclusive or None
    def inwin(self, i, j):
        w = self.window
        return w is not None and w[0] <= i <= w[1] and w[2] <= j <= w[3]
    def scaffold(self):
        """frozen cells of fixed scaffold (tile coords), path cells"""
        f = self.fam; fr = set(); vpath = set(); hpath = set()
        w = self.window
        for j in range(self.H):
            use = False
            if 'N' in self.ports and (w is None or j > w[3]) : use = True
            if 'S' in self.ports and (w is None or j < w[2]) : use = True
            if w is None and ('N' in self.ports or 'S' in self.ports): use = True
            if use:
                vpath.add((self.X, j))
                for d in f.vfrozen: fr.add((self.X + d, j))
        for i in range(self.W):
            use = False
            if 'E' in self.ports and (w is None or i > w[1]): use = True
            if 'W' in self.ports and (w is None or i < w[0]): use = True
            if use:
                hpath.add((i, self.Y))
                if f.hseg(i - self.X):
                    for d in f.hrows: fr.add((i, self.Y + d))
        fr = {c for c in fr if 0 <= c[0] < self.W and 0 <= c[1] < self.H and not self.inwin(*c)}
        return fr, vpath, hpath


def setup(tile, M):
    f = tile.fam
    RW, RH = tile.W + 2*M, tile.H + 2*M
    X, Y = tile.X + M, tile.Y + M
    fr_t, vpath_t, hpath_t = tile.scaffold()
    fixed_frozen = {(i+M, j+M) for (i, j) in fr_t}
    design = {(i+M, j+M) for i in range(tile.W) for j in range(tile.H) if tile.inwin(i, j)}
    def vstub(jrange):
        fr, p = set(), set()
        for j in jrange:
            p.add((X, j))
            for d in f.vfrozen: fr.add((X+d, j))
        return fr, p
    def hstub(irange):
        fr, p = set(), set()
        for i in irange:
            p.add((i, Y))
            if f.hseg(i - X):
                for d in f.hrows: fr.add((i, Y+d))
        return fr, p
    stubs = {'N': vstub(range(M + tile.H, RH)), 'S': vstub(range(0, M)),
             'E': hstub(range(M + tile.W, RW)), 'W': hstub(range(0, M))}
    tile_cells = {(i+M, j+M) for i in range(tile.W) for j in range(tile.H)}
    return dict(RW=RW, RH=RH, X=X, Y=Y, fixed_frozen=fixed_frozen, design=design, stubs=stubs, tile_cells=tile_cells, M=M)

def scen(tile, S, sc):
    f = tile.fam; M = S['M']; RW, RH, X, Y = S['RW'], S['RH'], S['X'], S['Y']
    stubs = S['stubs']
    ins, outs = sc['in'], sc['out']
    frozen_const = set(S['fixed_frozen']); init = set(); allowed = set(S['tile_cells'])
    for p, v in ins.items():
        if v is None: continue
        if v == 't':
            # activation template injected inside the tile, neighbour slot empty
            if p == 'N':
                init |= {(X, M + tile.H - 1 - r) for r in range(f.rN)}
            else:
                init |= {(i + M, Y) for i in range(tile.W - f.rE, tile.W) if f.hseg(i - tile.X)}
            continue
        fr, pth = stubs[p]; frozen_const |= fr; allowed |= fr | pth
        if v:
            for c in pth:
                if p == 'N' and c[1] >= RH - f.rN: init.add(c)
                if p == 'E' and c[0] >= RW - f.rE and f.hseg(c[0] - X): init.add(c)
    required = set()
    for p, v in outs.items():
        if v is None: continue
        if sc.get('dangle'):
            # no continuation wire: the tile's own output cell carries the value
            if v:
                if p == 'S': required.add((X, M))
                else: required.add((min(i for i in range(tile.W) if f.hseg(i - tile.X)) + M, Y))
            continue
        fr, pth = stubs[p]; frozen_const |= fr; allowed |= fr
        if v:
            allowed |= {c for c in pth if (p == 'S' or f.hseg(c[0]-X))}
            if p == 'S': required.add((X, 0))
            else:
                xs = [c[0] for c in pth if f.hseg(c[0]-X)]
                required.add((min(xs), Y))
    forbid = set()
    for c in [(i, j) for i in range(RW) for j in range(RH)]:
        if c in frozen_const: continue
        i, j = c
        if c not in allowed: forbid.add(c); continue
        if c in S['tile_cells']:
            ti, tj = i - M, j - M
            if ti < f.rE or tj < f.rN:
                ok = False
                if 'W' in outs and outs['W'] != 0 and j == Y and f.hseg(i - X) and 'W' in tile.ports: ok = True
                if 'S' in outs and outs['S'] != 0 and i == X and 'S' in tile.ports: ok = True
                if not ok: forbid.add(c)
    return frozen_const, init, forbid, required

def build(tile, scenarios, M=None, tmax=None, verbose=True, derive=None):
    f = tile.fam
    if M is None: M = max(f.rE, f.rN) + 3
    S = setup(tile, M)
    RW, RH = S['RW'], S['RH']
    if tmax is None: tmax = RW + RH + 10
    cells = [(i, j) for i in range(RW) for j in range(RH)]
    nv = [0]
    def new():
        nv[0] += 1; return nv[0]
    fv = {c: new() for c in sorted(S['design'])}
    clauses = []
    def nbrs(c):
        i, j = c
        out = []
        for k in f.SN:
            if j + k < RH: out.append((i, j+k))
        for k in f.SE:
            if i + k < RW: out.append((i+k, j))
        return out
    T = f.T
    for si, sc in enumerate(scenarios):
        frozen_const, init, forbid, required = scen(tile, S, sc)
        P = {c: new() for c in cells}
        for c in cells:
            if c in frozen_const or c in init: clauses.append([P[c]])
            if c in fv: clauses.append([-fv[c], P[c]])
            if c in forbid:
                clauses.append([-P[c]])
            nb = nbrs(c)
            if len(nb) >= T:
                for Q in itertools.combinations(nb, T):
                    clauses.append([P[c]] + [-P[q] for q in Q])
        if sc.get('quiet'):
            # already a fixed point: no tile cell fires beyond the chosen ones
            for c in S['tile_cells'] - frozen_const - init:
                clauses.append([-P[c], fv[c]] if c in fv else [-P[c]])
        if not required or (derive is not None and not derive[si]):
            continue
        D = [{c: new() for c in cells}]
        for c in cells:
            if c in frozen_const or c in init: continue
            if c in fv: clauses.append([-D[0][c], fv[c]])
            else: clauses.append([-D[0][c]])
        for t in range(1, tmax+1):
            Dt = {c: new() for c in cells}
            for c in cells:
                if c in frozen_const or c in init:
                    clauses.append([Dt[c]]); continue
                nb = nbrs(c)
                if len(nb) < T:
                    clauses.append([-Dt[c], D[-1][c]]); continue
                A = new()
                clauses.append([-Dt[c], D[-1][c], A])
                for Z in itertools.combinations(nb, len(nb) - T + 1):
                    clauses.append([-A] + [D[-1][z] for z in Z])
            D.append(Dt)
        for r in required:
            clauses.append([D[-1][r]])
    if verbose: print(f"vars={nv[0]} clauses={len(clauses)} design={len(S['design'])} region={RW}x{RH}", flush=True)
    return dict(fv=fv, clauses=clauses, M=M, RW=RW, RH=RH)

def check(tile, chosen, scenarios, M=None, verbose=True):
    f = tile.fam
    if M is None: M = max(f.rE, f.rN) + 3
    S = setup(tile, M)
    RW, RH = S['RW'], S['RH']
    ok_all = True
    for sc in scenarios:
        frozen_const, init, forbid, required = scen(tile, S, sc)
        g = np.zeros((RH, RW), dtype=bool)
        for (i, j) in frozen_const | init | {(i+M, j+M) for (i, j) in chosen}:
            g[j, i] = True
        fp, t = fixpoint(g, f.SN, f.SE, torus=False)
        bad = [c for c in forbid if fp[c[1], c[0]]]
        miss = [c for c in required if not fp[c[1], c[0]]]
        if bad or miss:
            ok_all = False
            if verbose: print("FAIL", sc, "leak", sorted(bad)[:8], "miss", miss)
    return ok_all

def solve(prob, minimize=False, timeout=None):
    s = Cadical153(bootstrap_with=prob['clauses'])
    t0 = time.time()
    ok = s.solve()
    print("solve", ok, f"{time.time()-t0:.1f}s", flush=True)
    if not ok: return None
    m = set(v for v in s.get_model() if v > 0)
    M = prob['M']
    chosen = {(c[0]-M, c[1]-M) for c, v in prob['fv'].items() if v in m}
    return chosen

def render(tile, chosen):
    fr, vp, hp = tile.scaffold()
    fr = fr | chosen
    rows = []
    for j in range(tile.H-1, -1, -1):
        rows.append(''.join('+' if (i, j) in fr else '-' for i in range(tile.W)))
    return rows
