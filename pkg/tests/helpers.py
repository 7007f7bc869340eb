from kohomologi.logic.complexes import Graph


def graph(vertices, edges=()):
    """graph("abc", ["ab", "bc"]) → stigen a − b − c."""
    return Graph.build(list(vertices), [tuple(e) for e in edges])
