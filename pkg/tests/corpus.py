"""Text inputs shared by the parser tests and the acceptance suite."""

# (kind, text): kind is "form", "poly" or "ratfn"
WORKED_EXAMPLE_TEXTS = [
    ("form", "x*dx + y*dy"),
    ("form", "dx"),
    ("form", "y^2*dx - dy"),
    ("form", "-x^3*dx + dy"),
    ("form", "dy - x^3*dx"),
    ("form", "dy"),
    ("form", "(x^2 - y^2 - 1)*dx + 2*x*y*dy"),
    ("form", "((x^2 - y^2 - 1)/x^2)*dx + (2*y/x)*dy"),
    ("form", "((x^2 - y^2 - 1)/x)*dx + 2*y*dy"),
    ("form", "y*dx - dy"),
    ("form", "(2*x - 5/2)*dx + 2*y*dy"),
    ("poly", "y^2 - x^3"),
    ("poly", "x^3"),
    ("poly", "x*y"),
    ("poly", "x^2 - 5/2*x + y^2 + 1"),
    ("ratfn", "1/x^2"),
    ("ratfn", "-2*y/x"),
    ("ratfn", "-(x^2 - y^2 - 1)/(x*y)"),
    ("ratfn", "-2*x/y"),
]

SYNTHETIC_TEXTS = [
    ("poly", "0"),
    ("poly", "x*y - x*y"),
    ("poly", "1/2*x^2 - 3/4*y + 7"),
    ("poly", "(x + y)^3"),
    ("poly", "-(x - 1)*(y + 2)"),
    ("poly", "0.25*x + 1.5*y^2"),
    ("poly", "x^10 - y^10"),
    ("poly", "  x  *  y  +  2  "),
    ("ratfn", "(x^2 - 1)/(x - 1)"),
    ("ratfn", "(3*x*y)/(6*x^2)"),
    ("ratfn", "(y - x)/(-2*x + 4)"),
    ("ratfn", "1/(1 + x^2 + y^2)"),
    ("ratfn", "x^2/3"),
    ("form", "-dx - dy"),
    ("form", "3/2*x*dx + (x - y)^2*dy"),
    ("form", "x*dx + x*dx"),
    ("form", "(1/(x^2 + 1))*dx - 2*dy"),
    ("form", "((x + y)/(x - y))*dy"),
    ("form", "dx + y*dx"),
    ("form", "-(x*y)*dy + 0*dx"),
]

ROUND_TRIP_CORPUS = WORKED_EXAMPLE_TEXTS + SYNTHETIC_TEXTS

# (text, expected offset of the error)
BAD_INPUTS = [
    ("2x*dx", 1),
    ("x*dx +", 6),
    ("x^y*dx", 2),
    ("x^-1*dx", 2),
    ("x^1/2*dx", 3),
    ("x*y", 0),
    ("x*dx*dy", 4),
    ("dx/x", 2),
    ("x dx", 2),
    ("(x + 1*dx", 7),
    ("z*dx", 0),
    ("0*dx", 0),
    ("x*dx # comment", 5),
    ("1/0*dx", 0),
]
