"""Published reference values used by ``antiseq verify`` and the test suite.

Polynomials are in rho, written in the :func:`antiseq.algebra.format_poly`
syntax; rows are indexed by ``m = 1..5`` and columns by ``k = 0..4``.
"""

from fractions import Fraction

# Erdos-Renyi graphs, SET decomposition
ER_TABLE = {
    1: ["1", "-1", "-rho+1", "-rho^3-3rho^2+3rho-1",
        "-rho^6-6rho^5-15rho^4-12rho^3+15rho^2-6rho+1"],
    2: ["0", "1", "rho-2", "rho^3+3rho^2-6rho+3",
        "rho^6+6rho^5+15rho^4+8rho^3-30rho^2+18rho-4"],
    3: ["0", "0", "1", "3rho-3", "4rho^3+15rho^2-18rho+6"],
    4: ["0", "0", "0", "1", "6rho-4"],
    5: ["0", "0", "0", "0", "1"],
}

# tournaments with ties, SEQ decomposition
TIES_TABLE = {
    1: ["1", "-2", "-2rho+4", "-2rho^3-6rho^2+12rho-8",
        "-2rho^6-12rho^5-30rho^4-16rho^3+60rho^2-48rho+16"],
    2: ["0", "2", "2rho-10", "2rho^3+6rho^2-30rho+38",
        "2rho^6+12rho^5+30rho^4-8rho^3-150rho^2+228rho-130"],
    3: ["0", "0", "6", "18rho-54", "24rho^3+90rho^2-324rho+330"],
    4: ["0", "0", "0", "24", "144rho-336"],
    5: ["0", "0", "0", "0", "120"],
}

# -d_{k,1}, k = 1..4, for simple graphs
GRAPH_CONNECTIVITY = [1, 0, 2, 24]

# -d_{2k,1}, k = 1..4, for triangulated surfaces
TRIANGULATION_CONNECTIVITY = [15, 9045, 30085425, 282543711975]

# d_{k,1}, k = 1..4, for G(n, 1/4), i.e. rho = 1/3
QUARTER_RHO = Fraction(1, 3)
QUARTER_COEFFICIENTS = [Fraction(-1), Fraction(2, 3), Fraction(-10, 27), Fraction(8, 729)]
