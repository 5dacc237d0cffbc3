"""Reference graphs and expected answers used across the test suite."""

FIVE_VERTEX = """\
{
[a: b c d]
[b: a e]
[c: a d]
[d: a c e]
[e: b d]
}
"""

MST_GRAPH = """\
{
[a: e(9) f(9)]
[b: c(7) d(2) e(8) f(9)]
[c: b(7) f(9)]
[d: b(2)]
[e: a(9) b(8) f(7)]
[f: a(9) b(9) c(9) e(7)]
}
"""
MST_WEIGHT = 33
MST_EDGES = {("b", "d"), ("e", "f"), ("b", "c"), ("b", "e"), ("a", "f")}

SPT_GRAPH = """\
{
[a: b(5) c(2) d(4)]
[b: f(8)]
[c: b(7) d(5) e(1)]
[d: b(1) c(2)]
[e: a(1) c(7) d(6) f(8)]
[f: b(3) d(1)]
}
"""
SPT_DIST = [0, 5, 2, 4, 3, 11]
SPT_DIST_SUM = 25

# edges carry (capacity, flow); the flow shown is a maximum flow
FLOW_GRAPH = """\
{
[b: c(7,0) d(8,4) f(6,6) h(9,6)]
[c: d(1,1) e(5,0)]
[d: a(1,0) g(4,4) h(1,1)]
[e: a(2,0) c(7,0)]
[f: h(2,0) j(15,13)]
[g: c(4,0) d(3,0) j(28,4)]
[h: f(7,7) g(5,0)]
[i->: b(16,16) c(16,1)]
[->j:]
}
"""
FLOW_VALUE = 17
