"""Regenerates the planar fixture sets. Run from this directory.

Every graph is checked for planarity (and triangle-freeness or girth where
relevant) before being written; signs are seeded coin flips.
"""

import itertools
import random

import networkx as nx

rng = random.Random(20240613)


def bipyramid(k):
    g = nx.cycle_graph(k)
    for apex in (k, k + 1):
        g.add_edges_from((apex, i) for i in range(k))
    return g


def stacked(n, seed):
    """Apollonian network: repeatedly insert a vertex into a face of K4."""
    r = random.Random(seed)
    g = nx.complete_graph(4)
    faces = [f for f in itertools.combinations(range(4), 3)]
    for v in range(4, n):
        a, b, c = faces.pop(r.randrange(len(faces)))
        g.add_edges_from([(v, a), (v, b), (v, c)])
        faces += [(a, b, v), (b, c, v), (a, c, v)]
    return g


def wheel(k):
    return nx.wheel_graph(k + 1)


def pentagon_strip(faces):
    """Pentagons glued edge to edge in a row."""
    g = nx.Graph()
    top, bottom = 0, 1
    g.add_edge(top, bottom)
    nxt = 2
    for _ in range(faces):
        a, b, c = nxt, nxt + 1, nxt + 2
        nxt += 3
        nx.add_path(g, [top, a, b, c, bottom])
        top, bottom = b, c
    return nx.convert_node_labels_to_integers(g)


def theta(*lengths):
    g = nx.Graph()
    nxt = 2
    for length in lengths:
        inner = list(range(nxt, nxt + length - 1))
        nxt += length - 1
        nx.add_path(g, [0, *inner, 1])
    return g


PLANAR = {
    "k4": nx.complete_graph(4),
    "bipyramid3": bipyramid(3),
    "octahedron": nx.octahedral_graph(),
    "bipyramid5": bipyramid(5),
    "bipyramid6": bipyramid(6),
    "icosahedron": nx.icosahedral_graph(),
    "stacked8": stacked(8, 1),
    "stacked10": stacked(10, 2),
    "stacked12": stacked(12, 3),
    "wheel7": wheel(7),
    "cube": nx.cubical_graph(),
    "grid3x4": nx.grid_2d_graph(3, 4),
}

TRIANGLE_FREE = {
    "c5": nx.cycle_graph(5),
    "cube": nx.cubical_graph(),
    "grid3x3": nx.grid_2d_graph(3, 3),
    "k2_5": nx.complete_bipartite_graph(2, 5),
    "grid3x4": nx.grid_2d_graph(3, 4),
    "pentagon_strip3": pentagon_strip(3),
}

GIRTH5 = {
    "c5": nx.cycle_graph(5),
    "c7": nx.cycle_graph(7),
    "pentagons2": pentagon_strip(2),
    "pentagons3": pentagon_strip(3),
    "theta233": theta(2, 3, 3),
    "theta333": theta(3, 3, 3),
}


def herschel():
    # Herschel graph: bipartite, planar, 11 vertices, 18 edges.
    edges = [
        (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 6), (1, 7),
        (2, 10), (3, 9), (4, 8), (4, 9), (5, 8), (5, 10), (6, 9), (6, 8),
        (7, 10), (7, 8),
    ]
    return nx.Graph(edges)


TRIANGLE_FREE["herschel"] = herschel()


def girth(g):
    return nx.girth(g)


def write(directory, name, g):
    g = nx.convert_node_labels_to_integers(g, ordering="sorted") if all(
        isinstance(v, int) for v in g.nodes
    ) else nx.convert_node_labels_to_integers(g)
    assert nx.check_planarity(g)[0], name
    assert g.number_of_nodes() <= 12, name
    edges = sorted(tuple(sorted(e)) for e in g.edges)
    lines = [f"# {name}", f"{g.number_of_nodes()} {len(edges)}"]
    lines += [f"{u} {v} {rng.choice('+-')}" for u, v in edges]
    with open(f"{directory}/{name}.txt", "w") as f:
        f.write("\n".join(lines) + "\n")


for name, g in PLANAR.items():
    write("planar", name, g)
for name, g in TRIANGLE_FREE.items():
    assert girth(g) >= 4, name
    write("triangle_free", name, g)
for name, g in GIRTH5.items():
    assert girth(g) >= 5, name
    write("girth5", name, g)
