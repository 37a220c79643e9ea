"""
indpoly - exact independence polynomials of graphs, their shape
(unimodality, log-concavity, real roots) and the graph families around them.
"""

__version__ = "1.0.0"
