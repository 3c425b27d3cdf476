#pragma once

// Triangulated genus-2 surface in R^3, centrally symmetric with involution
// v -> -v: the boundary of the slab [-3,3]x[-2,2]x[-1,1] with two square
// holes [1,2]x[-1,1] and [-2,-1]x[-1,1] cut through the z-direction,
// triangulated on the unit grid.  102 vertices, 208 triangles, Euler
// characteristic -2.  Frozen copy of assets/genus2.json; a test asserts the
// two stay byte-identical.

namespace butkit::detail {

inline constexpr const char* kGenus2Json = R"butkit_genus2({"ambient_dim":3,"manifold_dim":2,"vertices":[[-3.0,-2.0,-1.0],[-3.0,-2.0,0.0],[-3.0,-2.0,1.0],[-3.0,-1.0,-1.0],[-3.0,-1.0,0.0],[-3.0,-1.0,1.0],[-3.0,0.0,-1.0],[-3.0,0.0,0.0],[-3.0,0.0,1.0],[-3.0,1.0,-1.0],[-3.0,1.0,0.0],[-3.0,1.0,1.0],[-3.0,2.0,-1.0],[-3.0,2.0,0.0],[-3.0,2.0,1.0],[-2.0,-2.0,-1.0],[-2.0,-2.0,0.0],[-2.0,-2.0,1.0],[-2.0,-1.0,-1.0],[-2.0,-1.0,0.0],[-2.0,-1.0,1.0],[-2.0,0.0,-1.0],[-2.0,0.0,0.0],[-2.0,0.0,1.0],[-2.0,1.0,-1.0],[-2.0,1.0,0.0],[-2.0,1.0,1.0],[-2.0,2.0,-1.0],[-2.0,2.0,0.0],[-2.0,2.0,1.0],[-1.0,-2.0,-1.0],[-1.0,-2.0,0.0],[-1.0,-2.0,1.0],[-1.0,-1.0,-1.0],[-1.0,-1.0,0.0],[-1.0,-1.0,1.0],[-1.0,0.0,-1.0],[-1.0,0.0,0.0],[-1.0,0.0,1.0],[-1.0,1.0,-1.0],[-1.0,1.0,0.0],[-1.0,1.0,1.0],[-1.0,2.0,-1.0],[-1.0,2.0,0.0],[-1.0,2.0,1.0],[0.0,-2.0,-1.0],[0.0,-2.0,0.0],[0.0,-2.0,1.0],[0.0,-1.0,-1.0],[0.0,-1.0,1.0],[0.0,0.0,-1.0],[0.0,0.0,1.0],[0.0,1.0,-1.0],[0.0,1.0,1.0],[0.0,2.0,-1.0],[0.0,2.0,0.0],[0.0,2.0,1.0],[1.0,-2.0,-1.0],[1.0,-2.0,0.0],[1.0,-2.0,1.0],[1.0,-1.0,-1.0],[1.0,-1.0,0.0],[1.0,-1.0,1.0],[1.0,0.0,-1.0],[1.0,0.0,0.0],[1.0,0.0,1.0],[1.0,1.0,-1.0],[1.0,1.0,0.0],[1.0,1.0,1.0],[1.0,2.0,-1.0],[1.0,2.0,0.0],[1.0,2.0,1.0],[2.0,-2.0,-1.0],[2.0,-2.0,0.0],[2.0,-2.0,1.0],[2.0,-1.0,-1.0],[2.0,-1.0,0.0],[2.0,-1.0,1.0],[2.0,0.0,-1.0],[2.0,0.0,0.0],[2.0,0.0,1.0],[2.0,1.0,-1.0],[2.0,1.0,0.0],[2.0,1.0,1.0],[2.0,2.0,-1.0],[2.0,2.0,0.0],[2.0,2.0,1.0],[3.0,-2.0,-1.0],[3.0,-2.0,0.0],[3.0,-2.0,1.0],[3.0,-1.0,-1.0],[3.0,-1.0,0.0],[3.0,-1.0,1.0],[3.0,0.0,-1.0],[3.0,0.0,0.0],[3.0,0.0,1.0],[3.0,1.0,-1.0],[3.0,1.0,0.0],[3.0,1.0,1.0],[3.0,2.0,-1.0],[3.0,2.0,0.0],[3.0,2.0,1.0]],"simplices":[[0,1,4],[0,1,16],[0,3,4],[0,3,18],[0,15,16],[0,15,18],[1,2,5],[1,2,17],[1,4,5],[1,16,17],[2,5,20],[2,17,20],[3,4,7],[3,6,7],[3,6,21],[3,18,21],[4,5,8],[4,7,8],[5,8,23],[5,20,23],[6,7,10],[6,9,10],[6,9,24],[6,21,24],[7,8,11],[7,10,11],[8,11,26],[8,23,26],[9,10,13],[9,12,13],[9,12,27],[9,24,27],[10,11,14],[10,13,14],[11,14,29],[11,26,29],[12,13,28],[12,27,28],[13,14,29],[13,28,29],[15,16,31],[15,18,33],[15,30,31],[15,30,33],[16,17,32],[16,31,32],[17,20,35],[17,32,35],[18,19,22],[18,19,34],[18,21,22],[18,33,34],[19,20,23],[19,20,35],[19,22,23],[19,34,35],[21,22,25],[21,24,25],[22,23,26],[22,25,26],[24,25,40],[24,27,42],[24,39,40],[24,39,42],[25,26,41],[25,40,41],[26,29,44],[26,41,44],[27,28,43],[27,42,43],[28,29,44],[28,43,44],[30,31,46],[30,33,48],[30,45,46],[30,45,48],[31,32,47],[31,46,47],[32,35,49],[32,47,49],[33,34,37],[33,36,37],[33,36,50],[33,48,50],[34,35,38],[34,37,38],[35,38,51],[35,49,51],[36,37,40],[36,39,40],[36,39,52],[36,50,52],[37,38,41],[37,40,41],[38,41,53],[38,51,53],[39,42,54],[39,52,54],[41,44,56],[41,53,56],[42,43,55],[42,54,55],[43,44,56],[43,55,56],[45,46,58],[45,48,60],[45,57,58],[45,57,60],[46,47,59],[46,58,59],[47,49,62],[47,59,62],[48,50,63],[48,60,63],[49,51,65],[49,62,65],[50,52,66],[50,63,66],[51,53,68],[51,65,68],[52,54,69],[52,66,69],[53,56,71],[53,68,71],[54,55,70],[54,69,70],[55,56,71],[55,70,71],[57,58,73],[57,60,75],[57,72,73],[57,72,75],[58,59,74],[58,73,74],[59,62,77],[59,74,77],[60,61,64],[60,61,76],[60,63,64],[60,75,76],[61,62,65],[61,62,77],[61,64,65],[61,76,77],[63,64,67],[63,66,67],[64,65,68],[64,67,68],[66,67,82],[66,69,84],[66,81,82],[66,81,84],[67,68,83],[67,82,83],[68,71,86],[68,83,86],[69,70,85],[69,84,85],[70,71,86],[70,85,86],[72,73,88],[72,75,90],[72,87,88],[72,87,90],[73,74,89],[73,88,89],[74,77,92],[74,89,92],[75,76,79],[75,78,79],[75,78,93],[75,90,93],[76,77,80],[76,79,80],[77,80,95],[77,92,95],[78,79,82],[78,81,82],[78,81,96],[78,93,96],[79,80,83],[79,82,83],[80,83,98],[80,95,98],[81,84,99],[81,96,99],[83,86,101],[83,98,101],[84,85,100],[84,99,100],[85,86,101],[85,100,101],[87,88,91],[87,90,91],[88,89,92],[88,91,92],[90,91,94],[90,93,94],[91,92,95],[91,94,95],[93,94,97],[93,96,97],[94,95,98],[94,97,98],[96,97,100],[96,99,100],[97,98,101],[97,100,101]],"involution":[101,100,99,98,97,96,95,94,93,92,91,90,89,88,87,86,85,84,83,82,81,80,79,78,77,76,75,74,73,72,71,70,69,68,67,66,65,64,63,62,61,60,59,58,57,56,55,54,53,52,51,50,49,48,47,46,45,44,43,42,41,40,39,38,37,36,35,34,33,32,31,30,29,28,27,26,25,24,23,22,21,20,19,18,17,16,15,14,13,12,11,10,9,8,7,6,5,4,3,2,1,0]}
)butkit_genus2";

}  // namespace butkit::detail
