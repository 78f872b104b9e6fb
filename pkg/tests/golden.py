"""Hand-checked reference problems.

Three small tensors with independently computed inverses, stored to four
decimal places.  The expected arrays are storage-domain frontal slices in
slice-major order (n3, n1, n2).
"""

import numpy as np

# Moore-Penrose inverse of a 3 x 3 x 4 tensor.
PINV_IN = np.array(
    [
        [[1, 0, 0], [0, 1, 0], [0, 0, 3]],
        [[2, 3, 0], [2, 0, 0], [1, 0, 5]],
        [[3, 1, 0], [0, 2, 3], [4, 0, 0]],
        [[3, 1, 4], [0, 2, 2], [1, 0, 2]],
    ],
    dtype=float,
)

PINV_OUT = np.array(
    [
        [[1.6666, 1.3333, 9.7778], [1.3333, 1, 7.5556], [0, 0, -0.3333]],
        [[-1.2722, -1.0482, -8.2780], [-1.2295, -0.7384, -6.2015], [0.1057, -0.0651, 0.2724]],
        [[0.7451, 0.7255, 5.0065], [1.1372, 0.3529, 3.4837], [-0.2353, 0.1568, -0.0196]],
        [[-0.2723, -0.3815, -1.6113], [-0.5629, -0.0718, -1.0905], [0.1057, -0.0651, -0.0610]],
    ]
)

# Drazin inverse of a 3 x 3 x 3 tensor.
DRAZIN_IN = np.array(
    [
        [[2, 0, 0], [1, 3, 0], [0, 0, 0]],
        [[1, 3, 3], [0, 4, 5], [3, 0, 0]],
        [[3, 2, 0], [0, 1, 3], [2, 0, 1]],
    ],
    dtype=float,
)

DRAZIN_OUT = np.array(
    [
        [[0.0007, 0.0123, -0.1008], [-0.1030, 0.0358, 0.0223], [-0.0036, -0.0617, 0.0042]],
        [[0.2056, -0.0473, 0.6283], [0.0145, 0.0637, -0.1531], [0.1721, 0.0365, 0.0585]],
        [[-0.1937, 0.0317, -0.5392], [0.1115, -0.1005, 0.0693], [-0.2316, 0.0415, -0.0040]],
    ]
)

# Inverse of a 3 x 3 x 3 tensor along another 3 x 3 x 3 tensor.
ALONG_IN_A = np.array(
    [
        [[1, 0, 0], [0, -1, 0], [3, 0, 0]],
        [[0, 0, 3], [5, 2, 0], [0, 0, 1]],
        [[0, 2, 0], [0, 0, 2], [0, 4, 3]],
    ],
    dtype=float,
)

ALONG_IN_G = np.array(
    [
        [[3, 0, 0], [1, 0, 0], [0, 0, 2]],
        [[1, 0, 5], [2, 0, 0], [2, 0, 1]],
        [[0, 3, 4], [1, 0, 3], [1, 0, 0]],
    ],
    dtype=float,
)

ALONG_OUT = np.array(
    [
        [[-0.1043, -0.0495, 0.1030], [0.4039, -0.1304, -0.2377], [-0.4616, 0.0521, 0.1951]],
        [[0.1220, 0.1565, -0.0864], [-0.4423, 0.1439, 0.1765], [0.5999, -0.0208, -0.2729]],
        [[-0.0972, -0.0769, 0.0281], [0.0075, -0.1129, 0.1342], [-0.1260, 0.0084, 0.0486]],
    ]
)
