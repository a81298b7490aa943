//! Published component tables of the four-parameter example, in the chain
//! notation read by [`super::Table`].

/// `N` is `∇`, `Nt` is `∇̃`; `[a, b, c, d] = N13` means `∇_{X1}X3 = aX1 + bX2 + cX3 + dX4`.
pub const CONNECTIONS: &str = "
[0, 0, l2, l1] = N11 = N22 = Nt33 = Nt44
[l2, 0, 0, -l3] = N13 = N42 = -Nt24 = -Nt31
[l1, 0, l3, 0] = N14 = -N32 = Nt14 = -Nt32
[0, l2, 0, l4] = N23 = -N41 = Nt23 = -Nt41
[0, l1, -l4, 0] = N24 = N31 = -Nt13 = -Nt42
[-l4, -l3, 0, 0] = N33 = N44 = Nt11 = Nt22
";

pub const FUNDAMENTAL: &str = "
l1 = F112 = F121 = F134 = F143 = 1/2 F222 = 1/2 F244 = F314 = -F323 = -F332 = F341
l2 = 1/2 F111 = 1/2 F133 = F212 = F221 = F234 = F243 = -F414 = F423 = F432 = -F441
l3 = F114 = -F123 = -F132 = F141 = -F312 = -F321 = -F334 = -F343 = -1/2 F422 = -1/2 F444
l4 = -F214 = F223 = F232 = -F241 = -1/2 F311 = -1/2 F333 = -F412 = -F421 = -F434 = -F443
";

pub const FUNDAMENTAL_TWIN: &str = "
l1 = Ft114 = -Ft123 = -Ft132 = Ft141 = -Ft312 = -Ft321 = -Ft334 = -Ft343 = -1/2 Ft422 = -1/2 Ft444
l2 = -Ft214 = Ft223 = Ft232 = -Ft241 = -1/2 Ft311 = -1/2 Ft333 = -Ft412 = -Ft421 = -Ft434 = -Ft443
l3 = -Ft112 = -Ft121 = -Ft134 = -Ft143 = -1/2 Ft222 = -1/2 Ft244 = -Ft314 = Ft323 = Ft332 = -Ft341
l4 = -1/2 Ft111 = -1/2 Ft133 = -Ft212 = -Ft221 = -Ft234 = -Ft243 = Ft414 = -Ft423 = -Ft432 = Ft441
";

/// `th`, `ths` are `θ`, `θ*`; a trailing `t` marks the twin metric.
pub const LEE_FORMS: &str = "
4*l2 = th1 = ths3 = tht1 = thst3
4*l4 = th3 = -ths1 = tht3 = -thst1
4*l1 = th2 = ths4 = tht2 = thst4
4*l3 = th4 = -ths2 = tht4 = -thst2
";

/// Listed with `i < j` only.
pub const D_THETA: &str = "
4*(l1^2 - l2^2 + l3^2 - l4^2) = dth13 = dth42 = dtht13 = dtht42
-8*(l1*l2 + l3*l4) = dth14 = dth23 = dtht14 = dtht23
";

/// Up to the curvature symmetries.
pub const CURVATURE: &str = "
l1^2 + l2^2 = R1221
l4^2 - l2^2 = R1331
l4^2 - l1^2 = R1441
l3^2 - l2^2 = R2332
l3^2 - l1^2 = R2442
-l3^2 - l4^2 = R3443
-l1*l2 = R1341 = R2342
-l1*l3 = R2132 = -R4134
l1*l4 = R1231 = -R4234
l2*l3 = R2142 = -R3143
-l2*l4 = R1241 = -R3243
l3*l4 = R3123 = R4124
";

pub const CURVATURE_TWIN: &str = "
-l3^2 = Rt1241
-l4^2 = Rt2132
2*l2*l4 = Rt1331
2*l1*l3 = Rt2442
-l1*l2 = Rt3143 = Rt4234
-l3*l4 = Rt1231 = Rt2142
-l1^2 = Rt3243
-l2^2 = Rt4134
l1*l3 + l2*l4 = Rt1234 = Rt2341
l2*l3 = Rt1341 = Rt4124
l1*l4 = Rt2342 = Rt3123
";

/// Up to symmetry of `ρ`.
pub const RICCI: &str = "
2*(l1^2 + l2^2 - l4^2) = rho11
2*(l1^2 + l2^2 - l3^2) = rho22
2*(l4^2 + l3^2 - l2^2) = rho33
2*(l4^2 + l3^2 - l1^2) = rho44
2*l3^2 = rhot11
2*l4^2 = rhot22
2*l1^2 = rhot33
2*l2^2 = rhot44
2*(l1*l3 + 2*l2*l4) = rhot13
2*(2*l1*l3 + l2*l4) = rhot24
-2*l3*l4 = rho12 = rhot12
2*l1*l4 = rho23 = rhot23
-2*l1*l3 = rho13
-2*l1*l2 = rho34 = rhot34
2*l2*l3 = rho14 = rhot14
-2*l2*l4 = rho24
";

/// Up to `P_{ijkl} = −P_{jikl}`.
pub const P_TENSOR: &str = "
1/2*l1^2 = P3421 = -P2341
1/2*l2^2 = -P3412 = -P1432
1/2*l3^2 = -P1243 = -P1423
1/2*l4^2 = P1234 = -P2314
1/2*(l2^2 - l4^2) = P1313 = -P1331
1/2*(l1^2 - l3^2) = P2424 = -P2442
1/2*(l1^2 + l2^2 + l3^2) = -P1212
1/2*(l1^2 + l2^2 + l4^2) = P1221
1/2*(l1^2 + l3^2 - l4^2) = P1414
1/2*(l1^2 - l2^2 - l4^2) = -P1441
1/2*(l2^2 - l3^2 + l4^2) = P2323
1/2*(l1^2 - l2^2 + l3^2) = P2332
1/2*(l1^2 + l3^2 + l4^2) = P3434
1/2*(l2^2 + l3^2 + l4^2) = -P3443
1/2*(l1*l2 + l3*l4) = P1234 = P1332 = P2423 = P2441
1/2*(l2*l3 - l1*l4) = P1312 = -P1334 = -P2421 = P2443
1/2*l1*l2 = -1/2 P1341 = P1413 = -P1431 = P2324 = -P2342 = -1/2 P2432 = P3411 = -P3422 = P3433 = -P3444
1/2*l3*l4 = -P1211 = P1222 = -P1233 = P1244 = -1/2 P1323 = -P1424 = P1442 = -P2313 = P2331 = -1/2 P2414
1/2*l1*l3 = -P1223 = P1241 = P1421 = P1443 = P2321 = P2343 = 1/2 P2422 = 1/2 P2444 = -P3423 = -P3441
1/2*l2*l4 = P1214 = -P1232 = 1/2 P1311 = 1/2 P1333 = P1412 = P1434 = P2312 = P2334 = P3414 = -P3432
1/2*l1*l4 = -P1213 = P1231 = 1/2 P1321 = P2311 = P2322 = P2333 = P2344 = 1/2 P2434 = P3424 = -P3442
1/2*l2*l3 = P1224 = -P1242 = 1/2 P1343 = P1411 = P1422 = P1433 = P1444 = 1/2 P2412 = -P3413 = P3431
";

/// Up to `Φ_{ijk} = Φ_{jik}`; `f`, `fs` are `f`, `f*`.
pub const POTENTIAL: &str = "
-l1 = -Phi114 = -Phi224 = Phi334 = Phi444 = Phi132 = Phi242 = 1/4 f4 = -1/4 fs2
-l2 = -Phi113 = -Phi223 = Phi333 = Phi443 = Phi131 = Phi241 = -1/4 f3 = 1/4 fs1
-l3 = Phi112 = Phi222 = -Phi332 = -Phi442 = Phi134 = Phi244 = 1/4 f2 = 1/4 fs4
-l4 = Phi111 = Phi221 = -Phi331 = -Phi441 = Phi133 = Phi243 = 1/4 f1 = 1/4 fs3
";

pub const AVERAGE_CONNECTION: &str = "
[-1/2*l4, -1/2*l3, 1/2*l2, 1/2*l1] = D11 = D22 = D33 = D44
[1/2*l2, -1/2*l1, 1/2*l4, -1/2*l3] = D13 = -D24 = -D31 = D42
[l1, 0, l3, 0] = D14 = -D32
[0, l2, 0, l4] = D23 = -D41
";

/// Up to `K_{ijkl} = −K_{jikl}`.
pub const K_TENSOR: &str = "
l1^2 = K2424
l2^2 = K1313
l3^2 = K2442
l4^2 = K1331
1/2*l1*l3 = -K1223 = K1241 = K1421 = K1443 = K2321 = K2343 = 1/2 K2422 = 1/2 K2444 = -K3423 = K3441
1/2*l2*l4 = K1214 = -K1232 = 1/2 K1311 = 1/2 K1333 = K1412 = K1434 = K2312 = K2334 = K3414 = -K3432
l1*l2 + l3*l4 = K1314 = K1332 = K2423 = K2441
1/4*(l1*l2 - l3*l4) = K1211 = -K1222 = K1424 = -K1431 = K2313 = -K2342 = K3433 = -K3444
1/4*(l1*l4 + l2*l3) = -K1213 = K1224 = K1422 = K1433 = K2311 = K2344 = K3431 = -K3442
1/4*(l1*l2 + 3*l3*l4) = -K1233 = K1244 = K1442 = K2331
1/4*(3*l1*l2 + l3*l4) = K1413 = K2324 = K3411 = -K3422
1/4*(l1*l4 - 3*l2*l3) = K1242 = -K1411 = -K1444 = K3413
1/4*(3*l1*l4 - l2*l3) = K1231 = K2322 = K2333 = K3424
1/4*(l1^2 - 2*l2^2 + l3^2) = K1432 = K3412
l1*l2 = -K1341 = -K2432
1/4*(l2^2 - 2*l3^2 + l4^2) = K1243 = K1423
l3*l4 = -K1323 = -K2414
1/4*(2*l1^2 - l2^2 - l4^2) = -K2341 = K3421
l1*l4 = K1321 = K2434
1/4*(l1^2 + l3^2 - 2*l4^2) = -K1234 = K2314
l2*l3 = K1343 = K2412
1/4*(l1^2 + 2*l2^2 + l3^2) = -K1212
1/4*(2*l1^2 + l2^2 + l4^2) = K1221
1/4*(l1^2 + l3^2 + 2*l4^2) = K3434
1/4*(l2^2 + 2*l3^2 + l4^2) = -K3443
1/4*(3*l1^2 + 3*l3^2 - 2*l4^2) = K1414
1/4*(2*l1^2 - 3*l2^2 - 3*l4^2) = -K1441
1/4*(3*l2^2 - 2*l3^2 + 3*l4^2) = K2323
1/4*(3*l1^2 - 2*l2^2 + 3*l3^2) = K2332
";
