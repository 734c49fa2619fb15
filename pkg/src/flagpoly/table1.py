"""Published values of k(U_n(q), PGL_n(q)) for the Borel radical, n = 2..10.

Strings are kept in the LaTeX form they were published in; use
:func:`reference_polynomial` to get a :class:`Polynomial`.
"""

from __future__ import annotations

from flagpoly.polyring import Polynomial, parse

TABLE1_LATEX: dict[int, str] = {
    2: 'q^2 + q - 2',
    3: 'q^5 + q^3 - 3q^2 - 2q + 3',
    4: 'q^9 - q^7 + 2q^6 - 3q^5 - 2q^4 - 4q^3 + 9q^2 + 3q - 5',
    5: (
        'q^{14} - q^{12} - q^{11} + 3q^{10} - 5q^9 + 2q^8 - 9q^6 + 11q^5 + '
        '10q^4 - q^3 - 13q^2 - 4q + 7'
    ),
    6: (
        'q^{20} - q^{18} - q^{17} - q^{16} + 5q^{15} - 6q^{14} - 3q^{13} + '
        '12q^{12} + 3q^{11} - 40q^{10} + 44q^9 - 7q^8 + 5q^7 + 3q^6 - 5q^5 - '
        '38q^4 + 11q^3 + 24q^2 + 5q - 11'
    ),
    7: (
        'q^{27} - q^{25} - q^{24} - q^{23} + 6q^{21} - 6q^{20} - 4q^{19} + '
        '3q^{18} + 16q^{17} + 2q^{16} - 45q^{15} + 9q^{14} + 65q^{13} - '
        '36q^{12} - 47q^{11} + 118q^{10} - 130q^9 + 80q^8 - 85q^7 + 25q^6 + '
        '34q^5 + 46q^4 - 27q^3 - 31q^2 - 6q + 15'
    ),
    8: (
        'q^{35} - q^{33} - q^{32} - q^{31} + 8q^{28} - 7q^{27} - 5q^{26} + '
        '3q^{25} + 2q^{24} + 27q^{23} - 8q^{22} - 76q^{21} + 66q^{20} + '
        '9q^{19} + 8q^{18} - 96q^{17} + 109q^{16} + 56q^{15} - 73q^{14} - '
        '266q^{13} + 357q^{12} + 93q^{11} - 530q^{10} + 278q^9 + 253q^8 - '
        '153q^7 - 52q^6 + 11q^5 - 96q^4 + 51q^3 + 48q^2 + 7q - 22'
    ),
    9: (
        'q^{44} - q^{42} - q^{41} - q^{40} + q^{37} + 9q^{36} - 8q^{35} - '
        '6q^{34} + 3q^{33} + q^{32} + 8q^{31} + 25q^{30} - 2q^{29} - '
        '113q^{28} + 49q^{27} + 107q^{26} - 60q^{25} + 81q^{24} - 326q^{23} +'
        ' 97q^{22} + 702q^{21} - 603q^{20} - 446q^{19} + 337q^{18} + 760q^ '
        '{17} - 869q^{16} + 491q^{15} - 957q^{14} + 1063q^{13} - 142q^{12} + '
        '123q^{11} - 939q^{10} + 1130q^9 - 622q^8 - 255q^7 + 429q^6 - 60q^5 +'
        ' 124q^4 - 92q^3 - 60q^2 - 8q + 30'
    ),
    10: (
        'q^{54} - q^{52} - q^{51} - q^{50} + q^{47} + q^{46} + 10q^{45} - '
        '9q^{44} - 7q^{43} + 2q^{42} + q^{41} + 9q^{40} - 3q^{39} + 41q^{38} '
        '- 12q^{37} - 144q^{36} + 61q^{35} + 77q^{34} + 89q^{33} - 90q^{32} -'
        ' 5q^{31} - 189q^{30} - 109q^{29} + 561q^{28} + 256q^{27} - 746q^{26}'
        ' - 50q^{25} - 1070q^{24} + 3249q^{23} - 682q^{22} - 4884q^{21} + '
        '3467q^{20} + 5522q^{19} - 8703q^{18} + 757q^{17} + 5424q^{16} - '
        '1423q^{15} - 1450q^{14} - 4812q^{13} + 10000q^{12} - 6872q^{11} + '
        '726q^{10} + 1638q^9 - 555q^8 + 509q^ 7 - 858q^6 + 307q^5 - 222q^4 + '
        '137q^3 + 85q^2 + 9q - 42'
    ),
}


def reference_polynomial(n: int) -> Polynomial:
    return parse(TABLE1_LATEX[n])
