import numpy as np
# grid: array [n_rows(j), n_cols(i)] bool (+1 = True); j index = row from south (j=0 south)
def step(g, SN, SE, thr=None, torus=True):
    K = len(SN)+len(SE)
    if thr is None: thr = K//2+1
    cnt = np.zeros(g.shape, dtype=np.int16)
    for k in SN:
        if torus: cnt += np.roll(g, -k, axis=0)
        else:
            s = np.zeros_like(g); s[:-k] = g[k:] if k < g.shape[0] else s[:0]; cnt += s
    for k in SE:
        if torus: cnt += np.roll(g, -k, axis=1)
        else:
            s = np.zeros_like(g); s[:, :-k] = g[:, k:] if k < g.shape[1] else s[:, :0]; cnt += s
    return g | (cnt >= thr)

def fixpoint(g, SN, SE, torus=True, maxit=100000):
    t = 0
    while True:
        h = step(g, SN, SE, torus=torus)
        if (h == g).all(): return g, t
        g = h; t += 1
        assert t < maxit
