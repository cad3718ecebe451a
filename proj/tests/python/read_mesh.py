"""Independent OFF/OBJ reader: prints the vertex count, fails on bad indices."""

import sys


def read_off(lines):
    rows = [ln.split('#', 1)[0].split() for ln in lines]
    rows = [r for r in rows if r]
    if rows[0] != ['OFF']:
        raise ValueError('missing OFF header')
    nv, nf, _ = (int(x) for x in rows[1])
    verts = [tuple(float(x) for x in r) for r in rows[2:2 + nv]]
    if len(verts) != nv or any(len(v) != 3 for v in verts):
        raise ValueError('vertex block malformed')
    faces = rows[2 + nv:]
    if len(faces) != nf:
        raise ValueError(f'expected {nf} faces, found {len(faces)}')
    for f in faces:
        k = int(f[0])
        idx = [int(x) for x in f[1:1 + k]]
        if len(idx) != k or any(not 0 <= i < nv for i in idx):
            raise ValueError(f'bad face {f}')
    return nv


def read_obj(lines):
    verts, refs = 0, []
    for ln in lines:
        parts = ln.split('#', 1)[0].split()
        if not parts:
            continue
        if parts[0] == 'v':
            [float(x) for x in parts[1:4]]
            verts += 1
        elif parts[0] in ('f', 'l'):
            refs.extend(int(p.split('/')[0]) for p in parts[1:])
    if any(not 1 <= i <= verts for i in refs):
        raise ValueError('index out of range')
    return verts


def main(path):
    with open(path) as fh:
        lines = fh.read().splitlines()
    print(read_obj(lines) if path.endswith('.obj') else read_off(lines))


if __name__ == '__main__':
    main(sys.argv[1])
