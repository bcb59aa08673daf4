"""Hand-typed golden triangles of Legendre-Stirling numbers, rows 0..7.

Used by the ls_tables verification suite as fixed reference data,
independent of the symmetric-function computation being checked.
"""

LS_FIRST_ROWS_0_TO_7 = (
    (1,),
    (0, 1),
    (0, -2, 1),
    (0, 12, -8, 1),
    (0, -144, 108, -20, 1),
    (0, 2880, -2304, 508, -40, 1),
    (0, -86400, 72000, -17544, 1708, -70, 1),
    (0, 3628800, -3110400, 808848, -89280, 4648, -112, 1),
)

LS_SECOND_ROWS_0_TO_7 = (
    (1,),
    (0, 1),
    (0, 2, 1),
    (0, 4, 8, 1),
    (0, 8, 52, 20, 1),
    (0, 16, 320, 292, 40, 1),
    (0, 32, 1936, 3824, 1092, 70, 1),
    (0, 64, 11648, 47824, 25664, 3192, 112, 1),
)
