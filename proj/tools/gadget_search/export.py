"""Write a verified tile set as a .gadgets data file."""
import json, sys
from synth import Tile, render, contiguous, sparse


def family_of(spec):
    if spec[0] == 'c':
        return contiguous(int(spec[1]), int(spec[2])), f"contiguous {spec[1]} {spec[2]}"
    return sparse(*map(int, spec[1:5])), "sparse2 " + " ".join(spec[1:5])


def cells(cs):
    return " ".join(f"{i},{j}" for i, j in cs)


def export(spec, path):
    d = json.load(open(f"final_{'_'.join(spec)}.json"))
    W, X = d['W'], d['X']
    f, header = family_of(spec)
    north_in = [(X, W - 1 - r) for r in range(f.rN)]
    east_in = [(i, X) for i in range(W - f.rE, W) if f.hseg(i - X)]
    west_out = [(min(i for i in range(W) if f.hseg(i - X)), X)]
    south_out = [(X, 0)]
    ports = {
        'vwire': [f"port in N in {X} {cells(north_in)}", f"port out S out {X} {cells(south_out)}"],
        'hwire': [f"port in E in {X} {cells(east_in)}", f"port out W out {X} {cells(west_out)}"],
    }
    junction = [f"port in N north {X} {cells(north_in)}", f"port in E east {X} {cells(east_in)}",
                f"port out S south {X} {cells(south_out)}", f"port out W west {X} {cells(west_out)}"]
    rows = {'vwire': render(Tile(f, W, W, X, X, 'NS'), set()),
            'hwire': render(Tile(f, W, W, X, X, 'EW'), set())}
    rows.update(d['tiles'])
    out = [f"family {header}"]
    if spec[0] == 's':
        out.append(f"scale {W}")
    for name in ('vwire', 'hwire', 'and', 'or', 'cross'):
        out.append(f"tile {name} {W} {W}")
        out += rows[name]
        out += ports.get(name, junction)
    open(path, 'w').write("\n".join(out) + "\n")


if __name__ == '__main__':
    export(sys.argv[1].split(','), sys.argv[2])
