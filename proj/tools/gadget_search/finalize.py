import json, sys
import numpy as np
from synth import *
from search import family, contexts
from ca import fixpoint

def finalize(spec, kind, W, X):
    d = json.load(open(f"out_{'_'.join(spec)}_{kind}.json"))
    f = family(spec)
    rows = d['rows']
    t = Tile(f, W, W, X, X, 'NESW', None)
    # chosen = all frozen in rows minus scaffold (scaffold with window=None covers full crosses; use window to get fixed)
    if spec[0] == 'c':
        wx, wy = int(spec[1]), int(spec[2])
    else:
        wx, wy = f.rE, f.rN
    pad = d.get('pad', 3)
    win = (X - pad, X + wx + pad - 1, X - pad, X + wy + pad - 1)
    t = Tile(f, W, W, X, X, 'NESW', win)
    fr, _, _ = t.scaffold()
    frozen = {(i, W - 1 - r) for r, row in enumerate(rows) for i, ch in enumerate(row) if ch == '+'}
    chosen = frozen - fr
    M = max(f.rE, f.rN) + 3
    S = setup(t, M)
    # quiescence: FF scenario, freeze tile cells that fire
    sc = {'in': {'N': 0, 'E': 0}, 'out': {'S': 0, 'W': 0}}
    fc, init, forbid, req = scen(t, S, sc)
    g = np.zeros((S['RH'], S['RW']), dtype=bool)
    for (i, j) in fc | {(i+M, j+M) for (i, j) in chosen}: g[j, i] = True
    fp, _ = fixpoint(g, f.SN, f.SE, torus=False)
    added = {(i-M, j-M) for (i, j) in S['tile_cells'] if fp[j, i] and not g[j, i]}
    chosen2 = chosen | added
    ok = check(t, chosen2, contexts(kind))
    # quiescent after freezing?
    g = np.zeros((S['RH'], S['RW']), dtype=bool)
    for (i, j) in fc | {(i+M, j+M) for (i, j) in chosen2}: g[j, i] = True
    fp, steps = fixpoint(g, f.SN, f.SE, torus=False)
    print(spec, kind, 'added', len(added), 'ok', ok, 'quiescent', steps == 0)
    return render(t, chosen2), ok and steps == 0

if __name__ == '__main__':
    spec = sys.argv[1].split(','); W = int(sys.argv[2]); X = int(sys.argv[3])
    res = {}
    for kind in ('cross', 'and', 'or'):
        rows, ok = finalize(spec, kind, W, X)
        res[kind] = rows
        print('\n'.join(rows))
    json.dump(dict(spec=spec, W=W, X=X, tiles=res), open(f"final_{'_'.join(spec)}.json", 'w'))
