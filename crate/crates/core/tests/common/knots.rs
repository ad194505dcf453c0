/// Rolfsen knots with a PD code, reduced integral Khovanov homology as
/// `[torsion, rank, i, q]` rows, and the expected lambda.
pub const KNOT_TABLE: &[(&str, &str, &str, u32)] = &[
    ("8_19", "[[2,14,3,13],[5,11,6,10],[7,15,8,14],[9,5,10,4],[11,7,12,6],[12,2,13,1],[15,9,16,8],[16,4,1,3]]", "[[0,1,0,6],[0,1,2,10],[0,1,3,12],[0,1,4,12],[0,1,5,16]]", 2),
    ("10_124", "[[1,9,2,8],[3,11,4,10],[5,13,6,12],[7,19,8,18],[9,3,10,2],[11,5,12,4],[14,20,15,19],[16,14,17,13],[17,7,18,6],[20,16,1,15]]", "[[0,1,0,8],[0,1,2,12],[0,1,3,14],[0,1,4,14],[0,1,5,18],[0,1,6,18],[0,1,7,20]]", 2),
    ("10_128", "[[1,9,2,8],[3,11,4,10],[5,13,6,12],[7,19,8,18],[9,5,10,4],[11,3,12,2],[14,20,15,19],[16,14,17,13],[17,7,18,6],[20,16,1,15]]", "[[0,1,0,6],[0,1,1,8],[0,2,2,10],[0,2,3,12],[0,1,4,12],[0,2,4,14],[0,2,5,16],[0,1,6,18],[0,1,7,20]]", 2),
    ("10_139", "[[1,11,2,10],[4,18,5,17],[5,13,6,12],[7,15,8,14],[9,1,10,20],[11,3,12,2],[13,7,14,6],[16,4,17,3],[18,16,19,15],[19,9,20,8]]", "[[0,1,0,8],[0,1,2,12],[0,1,3,14],[0,1,4,14],[0,1,5,16],[0,1,5,18],[0,2,6,18],[0,1,7,20],[0,1,8,22],[0,1,9,24]]", 2),
    ("10_152", "[[1,7,2,6],[3,9,4,8],[5,19,6,18],[7,3,8,2],[10,16,11,15],[12,20,13,19],[14,10,15,9],[16,12,17,11],[17,5,18,4],[20,14,1,13]]", "[[0,1,0,8],[0,1,2,12],[0,1,3,14],[0,2,4,14],[0,2,5,16],[0,1,5,18],[0,3,6,18],[0,3,7,20],[0,2,8,22],[0,2,9,24],[0,1,10,26]]", 2),
    ("10_154", "[[1,17,2,16],[3,7,4,6],[5,1,6,20],[8,14,9,13],[10,8,11,7],[12,18,13,17],[14,10,15,9],[15,3,16,2],[18,12,19,11],[19,5,20,4]]", "[[0,1,0,6],[0,1,2,10],[0,1,3,10],[0,1,3,12],[0,3,4,12],[0,2,5,14],[0,1,5,16],[0,3,6,16],[0,3,7,18],[0,2,8,20],[0,2,9,22],[0,1,10,24]]", 2),
    ("10_161", "[[1,13,2,12],[4,18,5,17],[6,14,7,13],[8,4,9,3],[9,17,10,16],[11,1,12,20],[14,6,15,5],[15,11,16,10],[18,8,19,7],[19,3,20,2]]", "[[0,1,0,6],[0,1,2,10],[0,1,3,10],[0,1,3,12],[0,2,4,12],[0,1,5,14],[0,1,5,16],[0,2,6,16],[0,1,7,18],[0,1,8,20],[0,1,9,22]]", 2),
    ("9_42", "[[1,5,2,4],[5,11,6,10],[3,8,4,9],[9,2,10,3],[16,11,17,12],[14,8,15,7],[6,16,7,15],[18,13,1,14],[12,17,13,18]]", "[[0,1,-2,-6],[0,1,-1,-4],[0,1,0,-2],[0,1,0,0],[0,2,1,0],[0,1,2,2],[0,1,3,4],[0,1,4,6]]", 1),
    ("10_132", "[[1,8,2,9],[3,18,4,19],[5,12,6,13],[7,10,8,11],[9,2,10,3],[11,6,12,7],[14,20,15,19],[16,14,17,13],[17,4,18,5],[20,16,1,15]]", "[[0,1,-7,-14],[0,1,-6,-12],[0,1,-5,-10],[0,2,-4,-8],[0,1,-3,-8],[0,1,-3,-6],[0,1,-2,-6],[0,1,-2,-4],[0,1,-1,-2],[0,1,0,-2]]", 1),
    ("10_136", "[[2,17,3,18],[4,2,5,1],[7,14,8,15],[9,7,10,6],[12,19,13,20],[13,8,14,9],[15,11,16,10],[16,3,17,4],[18,11,19,12],[20,6,1,5]]", "[[0,1,-3,-8],[0,2,-2,-6],[0,2,-1,-4],[0,3,0,-2],[0,1,0,0],[0,3,1,0],[0,2,2,2],[0,2,3,4],[0,1,4,6]]", 1),
    ("10_145", "[[1,14,2,15],[3,18,4,19],[6,13,7,14],[8,6,9,5],[9,16,10,17],[11,2,12,3],[12,7,13,8],[15,20,16,1],[17,4,18,5],[19,10,20,11]]", "[[0,1,-9,-20],[0,1,-8,-18],[0,1,-7,-16],[0,2,-6,-14],[0,1,-5,-14],[0,1,-5,-12],[0,1,-4,-12],[0,1,-4,-10],[0,1,-3,-10],[0,1,-3,-8],[0,1,-2,-8],[0,1,0,-4]]", 1),
    ("10_153", "[[2,17,3,18],[3,11,4,10],[6,19,7,20],[7,13,8,12],[9,5,10,4],[11,15,12,14],[13,9,14,8],[16,1,17,2],[18,5,19,6],[20,15,1,16]]", "[[0,1,-5,-10],[0,1,-4,-8],[0,1,-3,-6],[0,2,-2,-4],[0,1,-1,-4],[0,1,-1,-2],[0,1,0,-2],[0,2,0,0],[0,1,1,0],[0,1,1,2],[0,2,2,2],[0,1,3,4],[0,1,4,6],[0,1,5,8]]", 1),
    ("3_1", "[[1,5,2,4],[3,1,4,6],[5,3,6,2]]", "[[0,1,0,2],[0,1,2,6],[0,1,3,8]]", 1),
    ("4_1", "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]", "[[0,1,-2,-4],[0,1,-1,-2],[0,1,0,0],[0,1,1,2],[0,1,2,4]]", 1),
    ("5_1", "[[2,8,3,7],[4,10,5,9],[6,2,7,1],[8,4,9,3],[10,6,1,5]]", "[[0,1,0,4],[0,1,2,8],[0,1,3,10],[0,1,4,12],[0,1,5,14]]", 1),
    ("5_2", "[[1,5,2,4],[3,9,4,8],[5,1,6,10],[7,3,8,2],[9,7,10,6]]", "[[0,1,0,2],[0,1,1,4],[0,2,2,6],[0,1,3,8],[0,1,4,10],[0,1,5,12]]", 1),
    ("6_1", "[[1,7,2,6],[3,10,4,11],[5,3,6,2],[7,1,8,12],[9,4,10,5],[11,9,12,8]]", "[[0,1,-2,-4],[0,1,-1,-2],[0,2,0,0],[0,2,1,2],[0,1,2,4],[0,1,3,6],[0,1,4,8]]", 1),
    ("6_2", "[[1,8,2,9],[3,11,4,10],[5,1,6,12],[7,2,8,3],[9,7,10,6],[11,5,12,4]]", "[[0,1,-2,-2],[0,1,-1,0],[0,2,0,2],[0,2,1,4],[0,2,2,6],[0,2,3,8],[0,1,4,10]]", 1),
    ("6_3", "[[4,2,5,1],[8,4,9,3],[12,9,1,10],[10,5,11,6],[6,11,7,12],[2,8,3,7]]", "[[0,1,-3,-6],[0,2,-2,-4],[0,2,-1,-2],[0,3,0,0],[0,2,1,2],[0,2,2,4],[0,1,3,6]]", 1),
    ("7_1", "[[1,9,2,8],[3,11,4,10],[5,13,6,12],[7,1,8,14],[9,3,10,2],[11,5,12,4],[13,7,14,6]]", "[[0,1,0,6],[0,1,2,10],[0,1,3,12],[0,1,4,14],[0,1,5,16],[0,1,6,18],[0,1,7,20]]", 1),
    ("7_4", "[[2,10,3,9],[4,12,5,11],[6,14,7,13],[8,4,9,3],[10,2,11,1],[12,8,13,7],[14,6,1,5]]", "[[0,1,0,2],[0,2,1,4],[0,3,2,6],[0,2,3,8],[0,3,4,10],[0,2,5,12],[0,1,6,14],[0,1,7,16]]", 1),
    ("7_7", "[[1,10,2,11],[3,13,4,12],[5,14,6,1],[7,5,8,4],[9,2,10,3],[11,9,12,8],[13,6,14,7]]", "[[0,1,-4,-8],[0,2,-3,-6],[0,3,-2,-4],[0,4,-1,-2],[0,4,0,0],[0,3,1,2],[0,3,2,4],[0,1,3,6]]", 1),
    ("8_5", "[[1,7,2,6],[3,9,4,8],[5,12,6,13],[7,3,8,2],[9,15,10,14],[11,1,12,16],[13,4,14,5],[15,11,16,10]]", "[[0,1,-2,0],[0,1,-1,2],[0,3,0,4],[0,3,1,6],[0,3,2,8],[0,4,3,10],[0,3,4,12],[0,2,5,14],[0,1,6,16]]", 1),
    ("8_20", "[[1,7,2,6],[4,13,5,14],[5,9,6,8],[7,3,8,2],[10,15,11,16],[12,9,13,10],[14,3,15,4],[16,11,1,12]]", "[[0,1,-5,-10],[0,1,-4,-8],[0,1,-3,-6],[0,2,-2,-4],[0,1,-1,-2],[0,2,0,0],[0,1,1,2]]", 1),
    ("8_21", "[[1,7,2,6],[4,13,5,14],[5,9,6,8],[7,3,8,2],[9,13,10,12],[11,1,12,16],[14,3,15,4],[15,11,16,10]]", "[[0,2,0,2],[0,2,1,4],[0,3,2,6],[0,3,3,8],[0,2,4,10],[0,2,5,12],[0,1,6,14]]", 1),
    ("9_1", "[[1,11,2,10],[3,13,4,12],[5,15,6,14],[7,17,8,16],[9,1,10,18],[11,3,12,2],[13,5,14,4],[15,7,16,6],[17,9,18,8]]", "[[0,1,0,8],[0,1,2,12],[0,1,3,14],[0,1,4,16],[0,1,5,18],[0,1,6,20],[0,1,7,22],[0,1,8,24],[0,1,9,26]]", 1),
    ("10_1", "[[2,11,3,12],[4,20,5,19],[6,18,7,17],[8,16,9,15],[10,14,11,13],[12,1,13,2],[14,10,15,9],[16,8,17,7],[18,6,19,5],[20,4,1,3]]", "[[0,1,-2,-4],[0,1,-1,-2],[0,2,0,0],[0,2,1,2],[0,2,2,4],[0,2,3,6],[0,2,4,8],[0,2,5,10],[0,1,6,12],[0,1,7,14],[0,1,8,16]]", 1),
];
