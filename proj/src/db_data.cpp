// Generated by tools/dbgen.cpp; do not edit by hand.
#include "k3cox/db.hpp"

namespace k3cox {

const char* const bundled_database_text = R"DBTEXT(
# Bundled rank-3 lattice database: Gram matrices, curve classes and
# the verified cone / generator data for the 26 families.

lattice S_1
rank 3
gram
6 0 0
0 -2 0
0 0 -2
curves 6
0 1 0
0 0 1
1 -2 0
1 0 -2
2 -3 -2
2 -2 -3
beff 7
0 0 1
0 1 0
1 -2 0
1 -1 -1
1 0 -2
2 -3 -2
2 -2 -3
nx 6
1 0 0
2 -3 0
2 0 -3
4 -6 -3
4 -3 -6
5 -6 -6
bnef 13
1 -1 -1
1 -1 0
1 0 -1
1 0 0
2 -3 -1
2 -3 0
2 -1 -3
2 0 -3
3 -4 -3
3 -3 -4
4 -6 -3
4 -3 -6
5 -6 -6
generators 7
0 0 1 .
0 1 0 .
1 -2 0 .
1 -1 -1 .
1 0 -2 .
2 -3 -2 .
2 -2 -3 .
involutions 1
5 -6 -6 2 -3 -2 2 -2 -3
end

lattice S_2
rank 3
gram
36 0 0
0 -2 1
0 1 -2
curves 6
0 1 0
0 0 1
1 -5 -3
1 -3 -5
2 -9 -8
2 -8 -9
beff 7
0 0 1
0 1 0
1 -5 -3
1 -4 -4
1 -3 -5
2 -9 -8
2 -8 -9
nx 6
1 0 0
5 -24 -12
5 -12 -24
13 -60 -48
13 -48 -60
17 -72 -72
bnef 61
1 -4 -4
1 -4 -3
1 -4 -2
1 -3 -4
1 -3 -3
1 -3 -2
1 -2 -4
1 -2 -3
1 -2 -2
1 -2 -1
1 -1 -2
1 -1 -1
1 0 0
2 -9 -7
2 -9 -6
2 -9 -5
2 -7 -9
2 -6 -9
2 -5 -9
3 -14 -10
3 -14 -9
3 -14 -8
3 -14 -7
3 -13 -12
3 -12 -13
3 -10 -14
3 -9 -14
3 -8 -14
3 -7 -14
4 -19 -11
4 -19 -10
4 -18 -15
4 -15 -18
4 -11 -19
4 -10 -19
5 -24 -12
5 -23 -18
5 -22 -20
5 -21 -21
5 -20 -22
5 -18 -23
5 -12 -24
6 -27 -23
6 -23 -27
7 -32 -26
7 -30 -29
7 -29 -30
7 -26 -32
8 -37 -29
8 -29 -37
9 -41 -34
9 -38 -38
9 -34 -41
10 -46 -37
10 -37 -46
11 -47 -46
11 -46 -47
13 -60 -48
13 -55 -55
13 -48 -60
17 -72 -72
generators 67
0 0 1 .
0 1 0 .
1 -5 -3 .
1 -4 -4 .
1 -4 -3 .
1 -4 -2 .
1 -3 -5 .
1 -3 -4 .
1 -3 -3 .
1 -3 -2 .
1 -2 -4 .
1 -2 -3 .
1 -2 -2 .
1 -2 -1 .
1 -1 -2 .
1 -1 -1 .
1 0 0 .
2 -9 -8 .
2 -9 -7 .
2 -9 -6 .
2 -9 -5 .
2 -8 -9 .
2 -7 -9 .
2 -6 -9 .
2 -5 -9 .
3 -14 -10 .
3 -14 -9 .
3 -14 -8 .
3 -14 -7 .
3 -13 -12 .
3 -12 -13 .
3 -10 -14 .
3 -9 -14 .
3 -8 -14 .
3 -7 -14 .
4 -19 -11 .
4 -19 -10 .
4 -18 -15 .
4 -15 -18 .
4 -11 -19 .
4 -10 -19 .
5 -24 -12 .
5 -23 -18 .
5 -22 -20 .
5 -21 -21 .
5 -20 -22 .
5 -18 -23 .
5 -12 -24 .
6 -27 -23 .
6 -23 -27 .
7 -32 -26 .
7 -30 -29 .
7 -29 -30 .
7 -26 -32 .
8 -37 -29 .
8 -29 -37 .
9 -41 -34 .
9 -38 -38 .
9 -34 -41 .
10 -46 -37 .
10 -37 -46 .
11 -47 -46 .
11 -46 -47 .
13 -60 -48 .
13 -55 -55 .
13 -48 -60 .
17 -72 -72 .
end

lattice S_3
rank 3
gram
12 0 0
0 -2 1
0 1 -2
curves 4
0 1 0
0 0 1
1 -3 -2
1 -2 -3
beff 4
0 0 1
0 1 0
1 -3 -2
1 -2 -3
nx 4
1 0 0
3 -8 -4
3 -4 -8
5 -12 -12
bnef 13
1 -2 -2
1 -2 -1
1 -1 -2
1 -1 -1
1 0 0
2 -5 -4
2 -5 -3
2 -4 -5
2 -3 -5
3 -8 -4
3 -7 -7
3 -4 -8
5 -12 -12
generators 17
0 0 1 .
0 1 0 .
1 -3 -2 .
1 -2 -3 .
1 -2 -2 .
1 -2 -1 .
1 -1 -2 .
1 -1 -1 .
1 0 0 .
2 -5 -4 .
2 -5 -3 .
2 -4 -5 .
2 -3 -5 .
3 -8 -4 .
3 -7 -7 .
3 -4 -8 .
5 -12 -12 .
end

lattice S_4
rank 3
gram
6 0 -1
0 -2 1
-1 1 -2
curves 4
0 1 0
0 -1 -1
1 -1 1
2 1 3
beff 4
0 -1 -1
0 1 0
1 -1 1
2 1 3
nx 4
3 -1 -2
7 -9 2
13 9 18
17 1 22
bnef 17
1 -1 0
1 0 0
1 0 1
2 -2 1
2 -1 -1
2 1 2
3 -1 -2
3 -1 3
3 1 4
3 2 4
4 -5 1
4 0 5
7 -9 2
8 5 11
10 1 13
13 9 18
17 1 22
generators 21
0 -1 -1 .
0 1 0 .
1 -1 0 .
1 -1 1 .
1 0 0 .
1 0 1 .
2 -2 1 .
2 -1 -1 .
2 1 2 .
2 1 3 .
3 -1 -2 .
3 -1 3 .
3 1 4 .
3 2 4 .
4 -5 1 .
4 0 5 .
7 -9 2 .
8 5 11 .
10 1 13 .
13 9 18 .
17 1 22 .
end

lattice S_5
rank 3
gram
4 0 0
0 -2 1
0 1 -2
curves 4
0 1 0
1 -1 -2
0 0 1
1 -2 -1
beff 4
0 0 1
0 1 0
1 -2 -1
1 -1 -2
nx 4
1 0 0
3 -4 -4
3 -4 -2
3 -2 -4
bnef 9
1 -1 -1
1 0 0
2 -2 -1
2 -1 -2
3 -4 -4
3 -4 -3
3 -4 -2
3 -3 -4
3 -2 -4
generators 7
0 0 1 .
0 1 0 .
1 -2 -1 .
1 -1 -2 .
1 -1 -1 .
1 0 0 .
3 -4 -4 .
end

lattice S_6
rank 3
gram
14 0 -1
0 -2 1
-1 1 -2
curves 6
0 -1 0
0 0 -1
1 3 1
2 3 5
2 5 4
3 6 7
beff 7
0 -1 0
0 0 -1
1 2 2
1 3 1
2 3 5
2 5 4
3 6 7
nx 6
3 -1 -2
5 13 4
17 31 40
19 23 46
25 65 42
41 89 90
bnef 43
1 0 0
1 1 0
1 1 1
1 1 2
1 2 1
1 2 2
2 0 -1
2 4 1
2 5 2
2 5 3
3 -1 -2
3 4 7
3 5 7
3 7 2
3 7 6
4 8 9
4 10 3
4 10 7
5 6 12
5 7 12
5 13 4
5 13 5
5 13 6
5 13 7
5 13 8
6 11 14
6 13 13
7 18 12
8 13 19
9 19 20
11 19 26
11 22 25
11 24 24
12 15 29
13 25 30
14 25 33
15 28 35
15 39 25
17 31 40
19 23 46
25 54 55
25 65 42
41 89 90
generators 33
0 -1 0 .
0 0 -1 .
1 0 0 .
1 1 0 .
1 1 1 .
1 1 2 .
1 2 1 .
1 2 2 .
1 3 1 .
2 0 -1 .
2 3 5 .
2 5 3 .
2 5 4 .
3 -1 -2 *
3 4 7 .
3 5 7 .
3 6 7 .
3 7 6 .
4 8 9 .
4 10 7 .
5 6 12 .
5 7 12 .
5 13 8 .
6 13 13 .
7 18 12 .
9 19 20 .
11 24 24 .
12 15 29 .
15 39 25 .
19 23 46 *
25 54 55 .
25 65 42 *
41 89 90 *
involutions 1
11 24 24 -2 -5 -4 -3 -6 -7
end

lattice S'_{4,1,2}
rank 3
gram
-6 2 0
2 -2 4
0 4 -8
curves 4
0 1 0
2 3 1
0 1 1
2 3 2
beff 5
0 1 0
0 1 1
1 2 1
2 3 1
2 3 2
nx 4
0 2 1
2 4 1
2 4 3
4 6 3
bnef 9
0 2 1
1 2 1
1 3 1
1 3 2
2 4 1
2 4 3
3 5 2
3 5 3
4 6 3
generators 13
0 1 0 .
0 1 1 .
0 2 1 .
1 2 1 .
1 3 1 .
1 3 2 .
2 3 1 .
2 3 2 .
2 4 1 .
2 4 3 .
3 5 2 .
3 5 3 .
4 6 3 .
involutions 1
-3 -4 -2 2 3 2 0 0 -1
end

lattice S_{4,1,1}
rank 3
gram
-32 0 4
0 -2 2
4 2 -2
curves 3
0 1 0
0 0 1
1 3 4
beff 3
0 0 1
0 1 0
1 3 4
nx 3
0 1 1
1 3 5
1 4 4
bnef 4
0 1 1
1 3 5
1 4 4
1 4 5
generators 7
0 0 1 .
0 1 0 .
0 1 1 .
1 3 4 .
1 3 5 .
1 4 4 .
1 4 5 .
note generator row printed as 'E. BNef', recorded as the union E, BNef
end

lattice S_{5,1,1}
rank 3
gram
-50 0 5
0 -2 2
5 2 -2
curves 4
0 1 0
0 0 1
1 4 5
4 15 24
beff 4
0 0 1
0 1 0
1 4 5
4 15 24
nx 4
0 1 1
1 5 5
4 15 25
5 19 29
bnef 9
0 1 1
1 4 6
1 5 5
1 5 6
2 8 13
3 12 17
4 15 25
5 19 29
5 19 30
generators 13
0 0 1 .
0 1 0 .
0 1 1 .
1 4 5 .
1 4 6 .
1 5 5 .
1 5 6 .
2 8 13 .
3 12 17 .
4 15 24 .
4 15 25 .
5 19 29 .
5 19 30 .
end

lattice S_{6,1,1}
rank 3
gram
-72 0 6
0 -2 2
6 2 -2
curves 4
0 0 1
1 5 6
2 9 14
0 1 0
beff 4
0 0 1
0 1 0
1 5 6
2 9 14
nx 4
0 1 1
1 6 6
2 9 15
3 14 20
bnef 9
0 1 1
1 5 7
1 5 8
1 6 6
1 6 7
2 9 15
2 10 13
3 14 20
3 14 21
generators 13
0 0 1 .
0 1 0 .
0 1 1 .
1 5 6 .
1 5 7 .
1 5 8 .
1 6 6 .
1 6 7 .
2 9 14 .
2 9 15 .
2 10 13 .
3 14 20 .
3 14 21 .
end

lattice S_{7,1,1}
rank 3
gram
-98 0 7
0 -2 2
7 2 -2
curves 6
0 0 1
1 6 7
0 1 0
3 16 24
4 21 34
6 33 46
beff 7
0 0 1
0 1 0
1 6 7
2 11 16
3 16 24
4 21 34
6 33 46
nx 6
0 1 1
1 7 7
4 21 35
7 37 58
7 39 53
9 49 70
bnef 25
0 1 1
1 6 8
1 6 9
1 7 7
1 7 8
2 11 16
2 11 17
2 11 18
2 12 15
3 16 25
3 16 26
3 17 23
4 21 35
4 22 31
4 23 30
5 27 40
5 28 38
6 32 49
7 37 58
7 37 59
7 38 55
7 39 53
8 43 64
9 49 70
10 55 77
generators 31
0 0 1 .
0 1 0 .
0 1 1 .
1 6 7 .
1 6 8 .
1 6 9 .
1 7 7 .
1 7 8 .
2 11 16 .
2 11 17 .
2 11 18 .
2 12 15 .
3 16 24 .
3 16 25 .
3 16 26 .
3 17 23 .
4 21 34 .
4 21 35 .
4 22 31 .
4 23 30 .
5 27 40 .
5 28 38 .
6 32 49 .
6 33 46 .
7 37 58 .
7 37 59 .
7 38 55 .
7 39 53 .
8 43 64 .
9 49 70 .
10 55 77 .
end

lattice S_{8,1,1}
rank 3
gram
-128 0 8
0 -2 2
8 2 -2
curves 4
0 0 1
1 6 9
1 7 8
0 1 0
beff 4
0 0 1
0 1 0
1 6 9
1 7 8
nx 4
0 1 1
1 6 10
1 8 8
2 13 17
bnef 9
0 1 1
1 6 10
1 7 9
1 7 10
1 8 8
1 8 9
2 13 17
2 13 18
2 14 17
generators 13
0 0 1 .
0 1 0 .
0 1 1 .
1 6 9 .
1 6 10 .
1 7 8 .
1 7 9 .
1 7 10 .
1 8 8 .
1 8 9 .
2 13 17 .
2 13 18 .
2 14 17 .
end

lattice S_{10,1,1}
rank 3
gram
-200 0 10
0 -2 2
10 2 -2
curves 8
1 9 10
4 32 43
0 0 1
3 23 34
2 15 24
6 47 66
4 33 42
0 1 0
beff 9
0 0 1
0 1 0
1 8 11
1 9 10
2 15 24
3 23 34
4 32 43
4 33 42
6 47 66
nx 8
0 1 1
1 10 10
2 15 25
5 38 58
5 42 52
8 65 85
9 70 100
10 79 109
bnef 25
0 1 1
1 8 11
1 8 12
1 8 13
1 9 11
1 10 10
1 10 11
2 15 25
2 17 21
3 23 35
3 26 31
4 31 45
5 38 58
5 38 59
5 40 54
5 41 53
5 42 52
7 54 79
7 55 77
8 65 85
9 70 100
9 72 97
9 74 95
10 79 109
13 102 143
generators 42
0 0 1 .
0 1 0 .
0 1 1 .
1 8 11 .
1 8 12 .
1 8 13 .
1 9 10 .
1 9 11 .
1 9 12 *
1 10 10 .
1 10 11 .
2 15 24 .
2 15 25 .
2 17 21 .
2 18 21 *
3 23 34 .
3 23 35 .
3 23 36 *
3 24 33 .
3 26 31 .
4 31 45 .
4 32 43 .
4 33 42 .
5 38 58 .
5 38 59 .
5 40 54 .
5 41 53 .
5 42 52 .
6 46 69 *
6 47 66 .
6 50 63 *
7 54 79 .
7 55 77 .
8 65 85 .
9 70 100 .
9 72 97 .
9 73 96 *
9 74 95 .
10 78 111 *
10 79 109 .
11 87 120 *
13 102 143 .
end

lattice S_{12,1,1}
rank 3
gram
-288 0 12
0 -2 2
12 2 -2
curves 6
0 1 0
1 9 14
2 19 26
0 0 1
1 11 12
2 20 25
beff 7
0 0 1
0 1 0
1 9 14
1 10 13
1 11 12
2 19 26
2 20 25
nx 6
0 1 1
1 9 15
1 12 12
3 28 40
3 31 37
4 39 51
bnef 19
0 1 1
1 9 15
1 10 13
1 10 14
1 10 15
1 11 13
1 12 12
1 12 13
2 19 27
2 21 25
3 28 40
3 28 41
3 29 39
3 30 38
3 31 37
3 32 37
4 39 51
5 48 65
5 50 63
generators 25
0 0 1 .
0 1 0 .
0 1 1 .
1 9 14 .
1 9 15 .
1 10 13 .
1 10 14 .
1 10 15 .
1 11 12 .
1 11 13 .
1 12 12 .
1 12 13 .
2 19 26 .
2 19 27 .
2 20 25 .
2 21 25 .
3 28 40 .
3 28 41 .
3 29 39 .
3 30 38 .
3 31 37 .
3 32 37 .
4 39 51 .
5 48 65 .
5 50 63 .
end

lattice S_{1,2,1}
rank 3
gram
-2 0 1
0 -8 4
1 4 -2
curves 3
1 0 0
0 0 1
0 1 1
beff 3
0 0 1
0 1 1
1 0 0
nx 3
0 1 2
4 3 8
4 5 8
bnef 6
0 1 2
1 1 2
2 2 5
2 3 5
4 3 8
4 5 8
generators 9
0 0 1 .
0 1 1 .
0 1 2 .
1 0 0 .
1 1 2 .
2 2 5 .
2 3 5 .
4 3 8 .
4 5 8 .
end

lattice S_{1,3,1}
rank 3
gram
-2 0 1
0 -18 6
1 6 -2
curves 3
1 0 0
0 0 1
0 1 2
beff 3
0 0 1
0 1 2
1 0 0
nx 3
0 1 3
1 1 2
2 1 4
bnef 4
0 1 3
1 1 2
1 1 3
2 1 4
generators 7
0 0 1 .
0 1 2 .
0 1 3 .
1 0 0 .
1 1 2 .
1 1 3 .
2 1 4 .
end

lattice S_{1,4,1}
rank 3
gram
-2 0 1
0 -32 8
1 8 -2
curves 4
1 0 0
0 1 3
0 0 1
3 3 8
beff 4
0 0 1
0 1 3
1 0 0
3 3 8
nx 4
0 1 4
4 3 8
8 3 16
24 29 80
bnef 15
0 1 4
1 1 3
1 1 4
2 1 4
2 1 5
2 3 9
3 2 6
4 3 8
4 4 11
4 5 14
5 2 10
7 8 22
8 3 16
14 17 47
24 29 80
generators 19
0 0 1 .
0 1 3 .
0 1 4 .
1 0 0 .
1 1 3 .
1 1 4 .
2 1 4 .
2 1 5 .
2 3 9 .
3 2 6 .
3 3 8 .
4 3 8 .
4 4 11 .
4 5 14 .
5 2 10 .
7 8 22 .
8 3 16 *
14 17 47 .
24 29 80 *
end

lattice S_{1,5,1}
rank 3
gram
-2 0 1
0 -50 10
1 10 -2
curves 6
1 0 0
0 1 4
0 0 1
4 3 10
5 6 21
16 16 55
beff 7
0 0 1
0 1 4
1 0 0
2 2 7
4 3 10
5 6 21
16 16 55
nx 6
0 1 5
5 3 10
5 7 25
10 3 20
20 19 65
190 197 680
bnef 27
0 1 5
1 1 4
1 1 5
1 2 8
2 1 4
2 1 5
2 1 6
2 2 7
2 3 11
3 1 6
3 2 7
5 3 10
5 7 25
6 2 13
6 5 17
7 8 28
9 9 31
10 3 20
13 12 41
14 15 52
20 19 65
25 25 86
30 31 107
46 47 162
51 53 183
118 122 421
190 197 680
generators 33
0 0 1 .
0 1 4 .
0 1 5 .
1 0 0 .
1 1 4 .
1 1 5 .
1 2 8 .
2 1 4 .
2 1 5 .
2 1 6 .
2 2 7 .
2 3 11 .
3 1 6 .
3 2 7 .
4 3 10 .
5 3 10 .
5 6 21 .
5 7 25 .
6 2 13 .
6 5 17 .
7 8 28 .
9 9 31 .
10 3 20 *
13 12 41 .
14 15 52 .
16 16 55 .
20 19 65 .
25 25 86 .
30 31 107 .
46 47 162 .
51 53 183 .
118 122 421 .
190 197 680 *
involutions 1
5 6 21 -60 -61 -210 16 16 55
end

lattice S_{1,6,1}
rank 3
gram
-2 0 1
0 -72 12
1 12 -2
curves 4
1 0 0
1 1 4
0 0 1
0 1 5
beff 4
0 0 1
0 1 5
1 0 0
1 1 4
nx 4
0 1 6
2 1 4
4 1 8
4 7 32
bnef 17
0 1 6
1 1 5
1 1 6
1 2 10
2 1 4
2 1 5
2 1 6
2 1 7
2 2 9
2 3 14
2 4 19
3 1 6
3 1 7
3 4 18
3 5 23
4 1 8
4 7 32
generators 21
0 0 1 .
0 1 5 .
0 1 6 .
1 0 0 .
1 1 4 .
1 1 5 .
1 1 6 .
1 2 10 .
2 1 4 .
2 1 5 .
2 1 6 .
2 1 7 .
2 2 9 .
2 3 14 .
2 4 19 .
3 1 6 .
3 1 7 .
3 4 18 .
3 5 23 .
4 1 8 .
4 7 32 .
end

lattice S_{1,9,1}
rank 3
gram
-2 0 1
0 -162 18
1 18 -2
curves 9
2 1 6
0 1 8
0 0 1
1 0 0
4 5 34
3 6 43
7 6 39
5 8 56
8 8 53
beff 12
0 0 1
0 1 8
1 0 0
1 1 7
2 1 6
2 3 21
3 3 20
3 6 43
4 5 34
5 8 56
7 6 39
8 8 53
nx 9
0 1 9
3 1 6
3 7 51
6 1 12
9 7 45
9 13 90
12 13 87
42 73 516
78 73 480
bnef 72
0 1 9
1 1 7
1 1 8
1 1 9
1 2 15
1 3 23
2 1 7
2 1 8
2 1 9
2 1 10
2 3 21
2 4 29
2 5 37
3 1 6
3 1 7
3 1 8
3 1 9
3 1 10
3 2 13
3 3 20
3 7 51
4 1 8
4 1 9
4 1 10
4 1 11
5 1 10
5 1 11
5 3 19
5 4 26
5 9 64
6 1 12
6 8 55
7 5 32
7 8 54
7 11 77
8 15 107
9 7 45
9 13 90
10 9 59
10 13 89
10 17 120
11 11 73
11 13 88
12 13 87
12 19 133
13 23 163
15 25 176
16 29 206
17 15 98
18 17 112
18 31 219
19 19 126
20 33 232
21 37 262
23 39 275
25 23 151
26 25 165
26 45 318
29 51 361
31 53 374
32 29 190
33 31 204
34 33 218
34 59 417
40 37 243
41 39 257
42 73 516
48 45 296
55 51 335
56 53 349
63 59 388
78 73 480
generators 90
0 0 1 .
0 1 8 .
0 1 9 .
1 0 0 .
1 1 7 .
1 1 8 .
1 1 9 .
1 2 15 .
1 3 23 .
2 1 6 .
2 1 7 .
2 1 8 .
2 1 9 .
2 1 10 .
2 3 21 .
2 4 29 .
2 5 37 .
3 1 6 .
3 1 7 .
3 1 8 .
3 1 9 .
3 1 10 .
3 2 13 .
3 3 20 .
3 4 28 *
3 5 36 *
3 6 43 .
3 6 44 *
3 7 51 .
4 1 8 .
4 1 9 .
4 1 10 .
4 1 11 .
4 4 27 *
4 5 34 .
5 1 10 .
5 1 11 .
5 3 19 .
5 4 26 .
5 6 41 *
5 8 56 .
5 9 64 .
6 1 12 .
6 5 33 *
6 8 55 .
7 5 32 .
7 6 39 .
7 8 54 .
7 11 77 .
8 6 39 *
8 8 53 .
8 15 107 .
9 7 45 .
9 11 75 *
9 13 90 .
10 9 59 .
10 13 89 .
10 17 120 .
11 11 73 .
11 13 88 .
12 13 87 .
12 19 133 .
13 16 109 *
13 23 163 .
15 25 176 .
16 29 206 .
17 15 98 .
18 17 112 .
18 31 219 .
19 19 126 .
20 33 232 .
21 37 262 .
23 39 275 .
25 23 151 .
26 25 165 .
26 45 318 .
29 51 361 .
31 53 374 .
32 29 190 .
33 31 204 .
34 33 218 .
34 59 417 .
40 37 243 .
41 39 257 .
42 73 516 .
48 45 296 .
55 51 335 .
56 53 349 .
63 59 388 .
78 73 480 .
end

lattice S_{1,1,1}
rank 3
gram
-2 0 1
0 -2 2
1 2 -2
curves 3
-1 0 0
0 1 0
1 0 1
beff 3
-1 0 0
0 1 0
1 0 1
nx 3
1 1 1
1 2 2
2 3 4
bnef 3
1 1 1
1 2 2
2 3 4
generators 6
-1 0 0 .
0 1 0 .
1 0 1 .
1 1 1 .
2 3 4 .
3 5 6 .
stored 1
note elliptic fibration with a section; generator set recorded from prior work
end

lattice S_{1,1,2}
rank 3
gram
-2 0 2
0 -2 4
2 4 -8
curves 3
0 -1 -1
1 2 2
0 3 2
beff 3
0 -1 -1
0 3 2
1 2 2
nx 3
0 2 1
1 1 1
1 4 3
bnef 3
0 2 1
1 1 1
1 4 3
generators 6
0 -1 -1 .
0 2 1 .
0 3 2 .
1 1 1 .
1 2 2 .
2 7 5 .
stored 1
note two fibrations meeting twice; generator set recorded from prior work
end

lattice S_{1,1,3}
rank 3
gram
-2 0 3
0 -2 6
3 6 -18
curves 4
0 -2 -1
1 6 3
2 3 2
0 5 2
beff 4
0 -2 -1
0 5 2
1 6 3
2 3 2
nx 4
0 3 1
3 9 5
3 24 11
6 12 7
bnef 11
0 3 1
1 4 2
1 9 4
2 6 3
3 7 4
3 9 5
3 14 7
3 19 9
3 24 11
4 9 5
6 12 7
generators 7
0 -2 -1 .
0 3 1 .
0 5 2 .
1 4 2 .
1 6 3 .
2 3 2 .
3 9 5 .
end

lattice S_{1,1,4}
rank 3
gram
-2 0 4
0 -2 8
4 8 -32
curves 4
0 -3 -1
1 2 1
0 7 2
1 12 4
beff 4
0 -3 -1
0 7 2
1 2 1
1 12 4
nx 4
0 4 1
2 8 3
2 14 5
2 28 9
bnef 9
0 4 1
1 6 2
1 9 3
1 16 5
2 8 3
2 11 4
2 14 5
2 21 7
2 28 9
generators 7
0 -3 -1 .
0 4 1 .
0 7 2 .
1 2 1 .
1 9 3 .
1 12 4 .
2 14 5 .
end

lattice S_{1,1,6}
rank 3
gram
-2 0 6
0 -2 12
6 12 -72
curves 6
0 5 1
2 3 1
3 16 4
1 0 0
4 15 4
0 1 0
beff 7
0 1 0
0 5 1
1 0 0
1 4 1
2 3 1
3 16 4
4 15 4
nx 6
0 6 1
3 3 1
3 6 1
3 21 5
6 18 5
15 66 17
bnef 23
0 6 1
1 4 1
1 5 1
1 6 1
1 9 2
2 4 1
2 5 1
2 6 1
3 3 1
3 4 1
3 5 1
3 6 1
3 7 2
3 21 5
4 20 5
5 19 5
6 18 5
7 36 9
8 35 9
9 34 9
11 51 13
12 50 13
15 66 17
generators 17
0 1 0 .
0 5 1 .
0 6 1 .
1 0 0 .
1 4 1 .
1 5 1 .
1 9 2 .
2 3 1 .
2 4 1 .
3 3 1 .
3 7 2 .
3 16 4 .
3 21 5 .
4 15 4 .
4 20 5 .
5 19 5 .
6 18 5 .
involutions 1
3 16 4 4 15 4 -18 -72 -19
end

lattice S_{1,1,8}
rank 3
gram
-2 0 8
0 -2 16
8 16 -128
curves 8
3 4 1
1 0 0
4 9 2
0 1 0
4 15 3
0 7 1
3 16 3
1 12 2
beff 12
0 1 0
0 7 1
1 0 0
1 6 1
1 12 2
2 5 1
2 11 2
3 4 1
3 10 2
3 16 3
4 9 2
4 15 3
nx 8
0 8 1
4 4 1
4 8 1
4 28 5
4 56 9
8 24 5
20 40 9
20 88 17
bnef 60
0 8 1
1 6 1
1 7 1
1 8 1
1 13 2
1 20 3
2 5 1
2 6 1
2 7 1
2 8 1
2 11 2
2 18 3
2 25 4
2 32 5
3 5 1
3 6 1
3 7 1
3 8 1
3 10 2
3 23 4
3 30 5
3 37 6
3 44 7
4 4 1
4 5 1
4 6 1
4 7 1
4 8 1
4 28 5
4 35 6
4 42 7
4 49 8
4 56 9
5 9 2
5 27 5
6 14 3
6 26 5
7 19 4
7 25 5
8 13 3
8 24 5
8 43 8
9 18 4
9 42 8
10 23 5
10 41 8
11 28 6
11 40 8
12 22 5
12 58 11
13 27 6
13 57 11
14 32 7
14 56 11
16 31 7
16 73 14
17 36 8
17 72 14
20 40 9
20 88 17
generators 29
0 1 0 .
0 7 1 .
0 8 1 .
1 0 0 .
1 6 1 .
1 7 1 .
1 12 2 .
1 13 2 .
2 5 1 .
2 11 2 .
3 4 1 .
3 5 1 .
3 10 2 .
3 11 2 *
3 16 3 .
3 17 3 *
3 23 4 .
4 4 1 .
4 9 2 .
4 15 3 .
4 16 3 *
4 28 5 .
5 9 2 .
5 15 3 *
5 21 4 *
5 27 5 .
7 19 4 .
7 25 5 .
8 24 5 .
end
)DBTEXT";

}  // namespace k3cox
