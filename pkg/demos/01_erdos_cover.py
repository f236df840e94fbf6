# The classical cover {0(2), 0(3), 1(4), 5(6), 7(12)}: covering function,
# multiplicity, period, irredundant classes.
from fractions import Fraction

from coverfrac import analyze, covering_count, erdos_example, split_class

B = erdos_example()
print("system:", B)

report = analyze(B)
for line in report.lines():
    print(" ", line)

# w_B is 12-periodic, so any window of 12 integers tells the whole story
print("w_B on [-3, 14]:", [covering_count(B, x) for x in range(-3, 15)])

# average of w over one period equals the sum of 1/n_s
print("average:", Fraction(sum(report.table), report.lcm),
      "sum 1/n:", sum(Fraction(1, n) for n in B.moduli))

# splitting a class refines the system without changing w
A = split_class(B, 1, 3)
print("split 0(2) by 3:", A)
print("same table:", analyze(A).table == report.table)
print("irredundant after split:", sorted(analyze(A).irredundant))
