"""The thirteen known Giuga numbers (OEIS A007850)."""

GIUGA_NUMBERS = (
    30,
    858,
    1722,
    66198,
    2214408306,
    24423128562,
    432749205173838,
    14737133470010574,
    550843391309130318,
    244197000982499715087866346,
    554079914617070801288578559178,
    1910667181420507984555759916338506,
    4200017949707747062038711509670656632404195753751630609228764416142557211582098432545190323474818,
)
