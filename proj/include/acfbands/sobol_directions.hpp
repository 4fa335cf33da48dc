#ifndef ACFBANDS_SOBOL_DIRECTIONS_HPP
#define ACFBANDS_SOBOL_DIRECTIONS_HPP

// Sobol direction numbers (Joe-Kuo), 64 dimensions x 64 bits.

#include <cstdint>

namespace acfbands::detail {

inline constexpr int kSobolDims = 64;

inline constexpr std::uint64_t kSobolV[64][64] = {
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0x2000000000000000ULL, 0x1000000000000000ULL,
        0x0800000000000000ULL, 0x0400000000000000ULL, 0x0200000000000000ULL, 0x0100000000000000ULL,
        0x0080000000000000ULL, 0x0040000000000000ULL, 0x0020000000000000ULL, 0x0010000000000000ULL,
        0x0008000000000000ULL, 0x0004000000000000ULL, 0x0002000000000000ULL, 0x0001000000000000ULL,
        0x0000800000000000ULL, 0x0000400000000000ULL, 0x0000200000000000ULL, 0x0000100000000000ULL,
        0x0000080000000000ULL, 0x0000040000000000ULL, 0x0000020000000000ULL, 0x0000010000000000ULL,
        0x0000008000000000ULL, 0x0000004000000000ULL, 0x0000002000000000ULL, 0x0000001000000000ULL,
        0x0000000800000000ULL, 0x0000000400000000ULL, 0x0000000200000000ULL, 0x0000000100000000ULL,
        0x0000000080000000ULL, 0x0000000040000000ULL, 0x0000000020000000ULL, 0x0000000010000000ULL,
        0x0000000008000000ULL, 0x0000000004000000ULL, 0x0000000002000000ULL, 0x0000000001000000ULL,
        0x0000000000800000ULL, 0x0000000000400000ULL, 0x0000000000200000ULL, 0x0000000000100000ULL,
        0x0000000000080000ULL, 0x0000000000040000ULL, 0x0000000000020000ULL, 0x0000000000010000ULL,
        0x0000000000008000ULL, 0x0000000000004000ULL, 0x0000000000002000ULL, 0x0000000000001000ULL,
        0x0000000000000800ULL, 0x0000000000000400ULL, 0x0000000000000200ULL, 0x0000000000000100ULL,
        0x0000000000000080ULL, 0x0000000000000040ULL, 0x0000000000000020ULL, 0x0000000000000010ULL,
        0x0000000000000008ULL, 0x0000000000000004ULL, 0x0000000000000002ULL, 0x0000000000000001ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0xa000000000000000ULL, 0xf000000000000000ULL,
        0x8800000000000000ULL, 0xcc00000000000000ULL, 0xaa00000000000000ULL, 0xff00000000000000ULL,
        0x8080000000000000ULL, 0xc0c0000000000000ULL, 0xa0a0000000000000ULL, 0xf0f0000000000000ULL,
        0x8888000000000000ULL, 0xcccc000000000000ULL, 0xaaaa000000000000ULL, 0xffff000000000000ULL,
        0x8000800000000000ULL, 0xc000c00000000000ULL, 0xa000a00000000000ULL, 0xf000f00000000000ULL,
        0x8800880000000000ULL, 0xcc00cc0000000000ULL, 0xaa00aa0000000000ULL, 0xff00ff0000000000ULL,
        0x8080808000000000ULL, 0xc0c0c0c000000000ULL, 0xa0a0a0a000000000ULL, 0xf0f0f0f000000000ULL,
        0x8888888800000000ULL, 0xcccccccc00000000ULL, 0xaaaaaaaa00000000ULL, 0xffffffff00000000ULL,
        0x8000000080000000ULL, 0xc0000000c0000000ULL, 0xa0000000a0000000ULL, 0xf0000000f0000000ULL,
        0x8800000088000000ULL, 0xcc000000cc000000ULL, 0xaa000000aa000000ULL, 0xff000000ff000000ULL,
        0x8080000080800000ULL, 0xc0c00000c0c00000ULL, 0xa0a00000a0a00000ULL, 0xf0f00000f0f00000ULL,
        0x8888000088880000ULL, 0xcccc0000cccc0000ULL, 0xaaaa0000aaaa0000ULL, 0xffff0000ffff0000ULL,
        0x8000800080008000ULL, 0xc000c000c000c000ULL, 0xa000a000a000a000ULL, 0xf000f000f000f000ULL,
        0x8800880088008800ULL, 0xcc00cc00cc00cc00ULL, 0xaa00aa00aa00aa00ULL, 0xff00ff00ff00ff00ULL,
        0x8080808080808080ULL, 0xc0c0c0c0c0c0c0c0ULL, 0xa0a0a0a0a0a0a0a0ULL, 0xf0f0f0f0f0f0f0f0ULL,
        0x8888888888888888ULL, 0xccccccccccccccccULL, 0xaaaaaaaaaaaaaaaaULL, 0xffffffffffffffffULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0x6000000000000000ULL, 0x9000000000000000ULL,
        0xe800000000000000ULL, 0x5c00000000000000ULL, 0x8e00000000000000ULL, 0xc500000000000000ULL,
        0x6880000000000000ULL, 0x9cc0000000000000ULL, 0xee60000000000000ULL, 0x5590000000000000ULL,
        0x8068000000000000ULL, 0xc09c000000000000ULL, 0x60ee000000000000ULL, 0x9055000000000000ULL,
        0xe880800000000000ULL, 0x5cc0c00000000000ULL, 0x8e60600000000000ULL, 0xc590900000000000ULL,
        0x6868e80000000000ULL, 0x9c9c5c0000000000ULL, 0xeeee8e0000000000ULL, 0x5555c50000000000ULL,
        0x8000e88000000000ULL, 0xc0005cc000000000ULL, 0x60008e6000000000ULL, 0x9000c59000000000ULL,
        0xe800686800000000ULL, 0x5c009c9c00000000ULL, 0x8e00eeee00000000ULL, 0xc500555500000000ULL,
        0x6880800080000000ULL, 0x9cc0c000c0000000ULL, 0xee60600060000000ULL, 0x5590900090000000ULL,
        0x8068e800e8000000ULL, 0xc09c5c005c000000ULL, 0x60ee8e008e000000ULL, 0x9055c500c5000000ULL,
        0xe880e88068800000ULL, 0x5cc05cc09cc00000ULL, 0x8e608e60ee600000ULL, 0xc590c59055900000ULL,
        0x6868686880680000ULL, 0x9c9c9c9cc09c0000ULL, 0xeeeeeeee60ee0000ULL, 0x5555555590550000ULL,
        0x8000000068808000ULL, 0xc00000009cc0c000ULL, 0x60000000ee606000ULL, 0x9000000055909000ULL,
        0xe80000008068e800ULL, 0x5c000000c09c5c00ULL, 0x8e00000060ee8e00ULL, 0xc50000009055c500ULL,
        0x68800000e880e880ULL, 0x9cc000005cc05cc0ULL, 0xee6000008e608e60ULL, 0x55900000c590c590ULL,
        0x8068000068686868ULL, 0xc09c00009c9c9c9cULL, 0x60ee0000eeeeeeeeULL, 0x9055000055555555ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0x2000000000000000ULL, 0x5000000000000000ULL,
        0xf800000000000000ULL, 0x7400000000000000ULL, 0xa200000000000000ULL, 0x9300000000000000ULL,
        0xd880000000000000ULL, 0x2540000000000000ULL, 0x59e0000000000000ULL, 0xe6d0000000000000ULL,
        0x7808000000000000ULL, 0xb40c000000000000ULL, 0x8202000000000000ULL, 0xc305000000000000ULL,
        0x208f800000000000ULL, 0x5147400000000000ULL, 0xfbea200000000000ULL, 0x75d9300000000000ULL,
        0xa085880000000000ULL, 0x914e540000000000ULL, 0xdbe79e0000000000ULL, 0x25db6d0000000000ULL,
        0x5880008000000000ULL, 0xe54000c000000000ULL, 0x79e0002000000000ULL, 0xb6d0005000000000ULL,
        0x800800f800000000ULL, 0xc00c007400000000ULL, 0x200200a200000000ULL, 0x5005009300000000ULL,
        0xf80f80d880000000ULL, 0x7407402540000000ULL, 0xa20a2059e0000000ULL, 0x930930e6d0000000ULL,
        0xd88d887808000000ULL, 0x254254b40c000000ULL, 0x59e59e8202000000ULL, 0xe6de6dc305000000ULL,
        0x780f80a08f800000ULL, 0xb407409147400000ULL, 0x820a20dbea200000ULL, 0xc3093025d9300000ULL,
        0x208d885885880000ULL, 0x514254e54e540000ULL, 0xfbe59e79e79e0000ULL, 0x75de6db6db6d0000ULL,
        0xa08f800000008000ULL, 0x914740000000c000ULL, 0xdbea200000002000ULL, 0x25d9300000005000ULL,
        0x588588000000f800ULL, 0xe54e540000007400ULL, 0x79e79e000000a200ULL, 0xb6db6d0000009300ULL,
        0x800000800000d880ULL, 0xc00000c000002540ULL, 0x20000020000059e0ULL, 0x500000500000e6d0ULL,
        0xf80000f800007808ULL, 0x740000740000b40cULL, 0xa20000a200008202ULL, 0x930000930000c305ULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0x2000000000000000ULL, 0xb000000000000000ULL,
        0xf800000000000000ULL, 0xdc00000000000000ULL, 0x7a00000000000000ULL, 0x9d00000000000000ULL,
        0x5a80000000000000ULL, 0x2fc0000000000000ULL, 0xa160000000000000ULL, 0xf0b0000000000000ULL,
        0xda88000000000000ULL, 0x6fc4000000000000ULL, 0x8162000000000000ULL, 0x40bb000000000000ULL,
        0x2287800000000000ULL, 0xb3c9c00000000000ULL, 0xfb65a00000000000ULL, 0xddb2d00000000000ULL,
        0x7802280000000000ULL, 0x9c0b3c0000000000ULL, 0x5a0fb60000000000ULL, 0x2d0ddb0000000000ULL,
        0xa287808000000000ULL, 0xf3c9c04000000000ULL, 0xdb65a02000000000ULL, 0x6db2d0b000000000ULL,
        0x800228f800000000ULL, 0x400b3cdc00000000ULL, 0x200fb67a00000000ULL, 0xb00ddb9d00000000ULL,
        0xf80780da80000000ULL, 0xdc09c06fc0000000ULL, 0x7a05a08160000000ULL, 0x9d02d040b0000000ULL,
        0x5a8a282288000000ULL, 0x2fcf3cb3c4000000ULL, 0xa16db6fb62000000ULL, 0xf0b6dbddbb000000ULL,
        0xda8000f807800000ULL, 0x6fc000dc09c00000ULL, 0x8160007a05a00000ULL, 0x40b0009d02d00000ULL,
        0x2288005a8a280000ULL, 0xb3c4002fcf3c0000ULL, 0xfb6200a16db60000ULL, 0xddbb00f0b6db0000ULL,
        0x780780da80008000ULL, 0x9c09c06fc0004000ULL, 0x5a05a08160002000ULL, 0x2d02d040b000b000ULL,
        0xa28a28228800f800ULL, 0xf3cf3cb3c400dc00ULL, 0xdb6db6fb62007a00ULL, 0x6db6dbddbb009d00ULL,
        0x800000f807805a80ULL, 0x400000dc09c02fc0ULL, 0x2000007a05a0a160ULL, 0xb000009d02d0f0b0ULL,
        0xf800005a8a28da88ULL, 0xdc00002fcf3c6fc4ULL, 0x7a0000a16db68162ULL, 0x9d0000f0b6db40bbULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0x6000000000000000ULL, 0x3000000000000000ULL,
        0xc800000000000000ULL, 0x2400000000000000ULL, 0x5600000000000000ULL, 0xfb00000000000000ULL,
        0xe080000000000000ULL, 0x7040000000000000ULL, 0xa860000000000000ULL, 0x1430000000000000ULL,
        0x9ec8000000000000ULL, 0xdf24000000000000ULL, 0xb6d6000000000000ULL, 0x8bbb000000000000ULL,
        0x4800800000000000ULL, 0x6400400000000000ULL, 0x3600600000000000ULL, 0xcb00300000000000ULL,
        0x2880c80000000000ULL, 0x5440240000000000ULL, 0xfe60560000000000ULL, 0xef30fb0000000000ULL,
        0x7e48e08000000000ULL, 0xaf64704000000000ULL, 0x1eb6a86000000000ULL, 0x9f8b143000000000ULL,
        0xd6c81ec800000000ULL, 0xbb249f2400000000ULL, 0x80d6d6d600000000ULL, 0x40bbbbbb00000000ULL,
        0x6080000080000000ULL, 0x3040000040000000ULL, 0xc860000060000000ULL, 0x2430000030000000ULL,
        0x56c80000c8000000ULL, 0xfb24000024000000ULL, 0xe0d6000056000000ULL, 0x70bb0000fb000000ULL,
        0xa8808000e0800000ULL, 0x1440400070400000ULL, 0x9e606000a8600000ULL, 0xdf30300014300000ULL,
        0xb648c8009ec80000ULL, 0x8b642400df240000ULL, 0x48b65600b6d60000ULL, 0x648bfb008bbb0000ULL,
        0x3648608048008000ULL, 0xcb64304064004000ULL, 0x28b6c86036006000ULL, 0x548b2430cb003000ULL,
        0xfe48d6c82880c800ULL, 0xef64bb2454402400ULL, 0x7eb680d6fe605600ULL, 0xaf8b40bbef30fb00ULL,
        0x1ec8e080fe48e080ULL, 0x9f247040ef647040ULL, 0xd6d6a8607eb6a860ULL, 0xbbbb1430af8b1430ULL,
        0x80001ec81ec81ec8ULL, 0x40009f249f249f24ULL, 0x6000d6d6d6d6d6d6ULL, 0x3000bbbbbbbbbbbbULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0xa000000000000000ULL, 0xd000000000000000ULL,
        0x5800000000000000ULL, 0x9400000000000000ULL, 0x3e00000000000000ULL, 0xe300000000000000ULL,
        0xbe80000000000000ULL, 0x23c0000000000000ULL, 0x1e20000000000000ULL, 0xf310000000000000ULL,
        0x4678000000000000ULL, 0x6784000000000000ULL, 0x7846000000000000ULL, 0x8467000000000000ULL,
        0xc678800000000000ULL, 0xa784c00000000000ULL, 0xd846a00000000000ULL, 0x5467d00000000000ULL,
        0x9e78d80000000000ULL, 0x3384540000000000ULL, 0xe6469e0000000000ULL, 0xb767330000000000ULL,
        0x20f8668000000000ULL, 0x104477c000000000ULL, 0xf866802000000000ULL, 0x4477c01000000000ULL,
        0x668020f800000000ULL, 0x77c0104400000000ULL, 0x8020f86600000000ULL, 0xc010447700000000ULL,
        0xa0f8668080000000ULL, 0xd04477c0c0000000ULL, 0x58668020a0000000ULL, 0x9477c010d0000000ULL,
        0x3e8020f858000000ULL, 0xe3c0104494000000ULL, 0xbe20f8663e000000ULL, 0x23104477e3000000ULL,
        0x1e7866803e800000ULL, 0xf38477c0e3c00000ULL, 0x46468020be200000ULL, 0x6767c01023100000ULL,
        0x78f820f81e780000ULL, 0x84441044f3840000ULL, 0xc666f86646460000ULL, 0xa777447767670000ULL,
        0xd800e680f8f88000ULL, 0x5400b7c04444c000ULL, 0x9e0020206666a000ULL, 0x330010107777d000ULL,
        0xe680f8f88000d800ULL, 0xb7c04444c0005400ULL, 0x20206666a0009e00ULL, 0x10107777d0003300ULL,
        0xf8f88000d800e680ULL, 0x4444c0005400b7c0ULL, 0x6666a0009e002020ULL, 0x7777d00033001010ULL,
        0x8000d800e680f8f8ULL, 0xc0005400b7c04444ULL, 0xa0009e0020206666ULL, 0xd000330010107777ULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0xa000000000000000ULL, 0x5000000000000000ULL,
        0x8800000000000000ULL, 0x2400000000000000ULL, 0x1200000000000000ULL, 0x2d00000000000000ULL,
        0x7680000000000000ULL, 0x9e40000000000000ULL, 0x0820000000000000ULL, 0x6410000000000000ULL,
        0xb228000000000000ULL, 0x7d14000000000000ULL, 0xfea2000000000000ULL, 0xba49000000000000ULL,
        0x1a24800000000000ULL, 0x491b400000000000ULL, 0xc4b5a00000000000ULL, 0xe373900000000000ULL,
        0xf680080000000000ULL, 0xde40040000000000ULL, 0xa8200a0000000000ULL, 0x3410050000000000ULL,
        0x3a28088000000000ULL, 0x5914024000000000ULL, 0xeca2012000000000ULL, 0x974902d000000000ULL,
        0x6ca4876800000000ULL, 0xd75b49e400000000ULL, 0xcc95a08200000000ULL, 0x8763964100000000ULL,
        0x44a8032280000000ULL, 0xa35403d140000000ULL, 0x568205ea20000000ULL, 0x8e590ea490000000ULL,
        0x200c892248000000ULL, 0x100f46d1b4000000ULL, 0x2817ad6b5a000000ULL, 0x743a9ce739000000ULL,
        0x9a24800000800000ULL, 0x091b400000400000ULL, 0x64b5a00000a00000ULL, 0xb373900000500000ULL,
        0x7e80080000880000ULL, 0xfa40040000240000ULL, 0xba200a0000120000ULL, 0x19100500002d0000ULL,
        0x4ca8088000768000ULL, 0xc7540240009e4000ULL, 0xe482012000082000ULL, 0xf35902d000641000ULL,
        0xde8c876800b22800ULL, 0xaa4f49e4007d1400ULL, 0x3237a08200fea200ULL, 0x3d2a964100ba4900ULL,
        0x5e8c8322801a2480ULL, 0xea4f43d140491b40ULL, 0x9237a5ea20c4b5a0ULL, 0x6d2a9ea490e37390ULL,
        0xd68c812248f68008ULL, 0xce4f42d1b4de4004ULL, 0x8037a76b5aa8200aULL, 0x402a99e739341005ULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0xa000000000000000ULL, 0x5000000000000000ULL,
        0x2800000000000000ULL, 0xd400000000000000ULL, 0x6a00000000000000ULL, 0x7100000000000000ULL,
        0x3880000000000000ULL, 0x5840000000000000ULL, 0xea20000000000000ULL, 0x3110000000000000ULL,
        0x98a8000000000000ULL, 0x0854000000000000ULL, 0xc22a000000000000ULL, 0xe525000000000000ULL,
        0xf2b2800000000000ULL, 0x7948400000000000ULL, 0xfaa4200000000000ULL, 0xbd73100000000000ULL,
        0x18a8080000000000ULL, 0x4854040000000000ULL, 0x622a0a0000000000ULL, 0xb525050000000000ULL,
        0xdab2828000000000ULL, 0xad484d4000000000ULL, 0x90a426a000000000ULL, 0xcc73171000000000ULL,
        0x20280b8800000000ULL, 0x1014018400000000ULL, 0x880a04a200000000ULL, 0x8435061100000000ULL,
        0x421a8b0a80000000ULL, 0xa51c4dc540000000ULL, 0x528e2a82a0000000ULL, 0x2956194250000000ULL,
        0xd29a84a328000000ULL, 0x695c461084000000ULL, 0x72ae2b0842000000ULL, 0x39461dc631000000ULL,
        0x5ab2828000800000ULL, 0xed484d4000400000ULL, 0x30a426a000a00000ULL, 0x9c73171000500000ULL,
        0x08280b8800280000ULL, 0xc414018400d40000ULL, 0xe20a04a2006a0000ULL, 0xf535061100710000ULL,
        0x7a9a8b0a80388000ULL, 0xfd5c4dc540584000ULL, 0xb8ae2a82a0ea2000ULL, 0x1846194250311000ULL,
        0x4a3284a32898a800ULL, 0x6108461084085400ULL, 0xb0842b0842c22a00ULL, 0xdc631dc631e52500ULL,
        0xa80002800072b280ULL, 0x94000d4000394840ULL, 0xca0006a0005aa420ULL, 0x2100071000ed7310ULL,
        0x108003880030a808ULL, 0x8c400584009c5404ULL, 0x80200ea200082a0aULL, 0x4010031100c42505ULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0xe000000000000000ULL, 0xb000000000000000ULL,
        0x9800000000000000ULL, 0x9400000000000000ULL, 0x8a00000000000000ULL, 0x5b00000000000000ULL,
        0x3380000000000000ULL, 0xd9c0000000000000ULL, 0x7220000000000000ULL, 0x3f10000000000000ULL,
        0xc1b8000000000000ULL, 0xa6ec000000000000ULL, 0x5386000000000000ULL, 0x29f5000000000000ULL,
        0x0a3a800000000000ULL, 0x1b2ac00000000000ULL, 0xd392e00000000000ULL, 0x69ff700000000000ULL,
        0xea38080000000000ULL, 0xab2c040000000000ULL, 0x4ba60e0000000000ULL, 0xfde50b0000000000ULL,
        0x6002898000000000ULL, 0xf006c94000000000ULL, 0x7834e8a000000000ULL, 0x241a75b000000000ULL,
        0x123a8b3800000000ULL, 0xcf2ac99c00000000ULL, 0xb992e92200000000ULL, 0x82ff78f100000000ULL,
        0x41b80d9b80000000ULL, 0xe6ec072ec0000000ULL, 0xb386039860000000ULL, 0x99f50c2f50000000ULL,
        0x923a8a1ba8000000ULL, 0x8f2ac56eac000000ULL, 0x5992e2bb2e000000ULL, 0x32ff70def7000000ULL,
        0xd9b8098000800000ULL, 0x72ec094000400000ULL, 0x398608a000e00000ULL, 0xc2f505b000b00000ULL,
        0xa1ba833800980000ULL, 0x56eacd9c00940000ULL, 0x2bb2e722008a0000ULL, 0x0def73f1005b0000ULL,
        0x1800041b80338000ULL, 0xd4000e6ec0d9c000ULL, 0x6a000b3860722000ULL, 0xeb00099f503f1000ULL,
        0xab800923a8c1b800ULL, 0x4dc008f2aca6ec00ULL, 0xf82005992e538600ULL, 0x6410032ff729f500ULL,
        0xf2380d9b808a3a80ULL, 0x7f2c072ec05b2ac0ULL, 0x21a60398603392e0ULL, 0x16e50c2f50d9ff70ULL,
        0xcb828a1ba8723808ULL, 0xbdc6c56eac3f2c04ULL, 0x8014e2bb2ec1a60eULL, 0x400a70def7a6e50bULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0xa000000000000000ULL, 0x1000000000000000ULL,
        0x0800000000000000ULL, 0x6c00000000000000ULL, 0x9e00000000000000ULL, 0x2300000000000000ULL,
        0x5780000000000000ULL, 0xadc0000000000000ULL, 0x7fa0000000000000ULL, 0x91d0000000000000ULL,
        0x4988000000000000ULL, 0xced4000000000000ULL, 0x880a000000000000ULL, 0x2c0f000000000000ULL,
        0x3e0d800000000000ULL, 0x3317c00000000000ULL, 0x5fb0600000000000ULL, 0xc1f8b00000000000ULL,
        0xe18d880000000000ULL, 0xb2d7c40000000000ULL, 0x1e106a0000000000ULL, 0x6328b10000000000ULL,
        0xf785888000000000ULL, 0xbdc3c2c000000000ULL, 0x77ba63e000000000ULL, 0xfdf7b33000000000ULL,
        0xd7800df800000000ULL, 0xedc0081c00000000ULL, 0xdfa0041a00000000ULL, 0x81d00a2d00000000ULL,
        0x4188016080000000ULL, 0xa2d400f140000000ULL, 0x160a069aa0000000ULL, 0x0f0f09edf0000000ULL,
        0x698d820058000000ULL, 0x9ed7c5003c000000ULL, 0x20106a81a6000000ULL, 0x5028b7c27b000000ULL,
        0xa805816080800000ULL, 0x7c03c0f140400000ULL, 0x961a669aa0a00000ULL, 0x4f27b9edf0100000ULL,
        0xc9880a0058080000ULL, 0x8ed401003c6c0000ULL, 0x280a0081a69e0000ULL, 0x3c0f06c27b230000ULL,
        0x360d89e080d78000ULL, 0x5f17c23140edc000ULL, 0xc1b0657aa0dfa000ULL, 0xe2f8baddf081d000ULL,
        0xb60d8ff858418800ULL, 0x1f17cd1c3ca2d400ULL, 0x61b06e9ba6160a00ULL, 0xf2f8bdef7b0f0f00ULL,
        0xbe0d800000e98d80ULL, 0x7317c00000ded7c0ULL, 0xffb0600000801060ULL, 0xd1f8b000004028b0ULL,
        0xe98d880000a00588ULL, 0xded7c400001003c4ULL, 0x80106a0000081a6aULL, 0x4028b100006c27b1ULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0x2000000000000000ULL, 0x3000000000000000ULL,
        0x5800000000000000ULL, 0xac00000000000000ULL, 0x9600000000000000ULL, 0x2b00000000000000ULL,
        0xd480000000000000ULL, 0x0940000000000000ULL, 0xe2a0000000000000ULL, 0x5250000000000000ULL,
        0x4e28000000000000ULL, 0xc71c000000000000ULL, 0x629e000000000000ULL, 0x1267000000000000ULL,
        0x6e13800000000000ULL, 0xf731c00000000000ULL, 0x3a98a00000000000ULL, 0xbe44900000000000ULL,
        0xf83b880000000000ULL, 0xdc2dc40000000000ULL, 0xee06a20000000000ULL, 0xb723930000000000ULL,
        0x1aa80d8000000000ULL, 0x8e5c0ec000000000ULL, 0xa03e0b6000000000ULL, 0x703701b000000000ULL,
        0x783b88c800000000ULL, 0x9c2dca5400000000ULL, 0xce06a74a00000000ULL, 0x8723979500000000ULL,
        0x42a801aa80000000ULL, 0x225c08e5c0000000ULL, 0x363e0a03e0000000ULL, 0x5b37070370000000ULL,
        0xacbb8783b8000000ULL, 0x956dc9c2dc000000ULL, 0x2ca6ace06a000000ULL, 0xd573987239000000ULL,
        0x0c800c2a80800000ULL, 0xe5400625c0400000ULL, 0x54a00163e0200000ULL, 0x495006b370300000ULL,
        0xc2a80f4bb8580000ULL, 0x625c0396dcac0000ULL, 0x163e0baa6a960000ULL, 0x6b370fe7392b0000ULL,
        0xf4bb8d8000548000ULL, 0x396dcec000494000ULL, 0xbaa6ab6000c2a000ULL, 0xfe7391b000625000ULL,
        0xd80000c800162800ULL, 0xec000e54006b1c00ULL, 0xb600054a00f49e00ULL, 0x1b00049500396700ULL,
        0x8c800c2a80ba9380ULL, 0xa5400625c0fe71c0ULL, 0x74a00163e0d838a0ULL, 0x795006b370ec1490ULL,
        0x9aa80f4bb8b61388ULL, 0xce5c0396dc1b31c4ULL, 0x803e0baa6a8c98a2ULL, 0x40370fe739a54493ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0xa000000000000000ULL, 0x5000000000000000ULL,
        0xf800000000000000ULL, 0x8c00000000000000ULL, 0xe200000000000000ULL, 0x3300000000000000ULL,
        0x0f80000000000000ULL, 0x2140000000000000ULL, 0x95a0000000000000ULL, 0x5e70000000000000ULL,
        0xd808000000000000ULL, 0x1c24000000000000ULL, 0xba16000000000000ULL, 0xef37000000000000ULL,
        0x1586800000000000ULL, 0x9e6fc00000000000ULL, 0x781b600000000000ULL, 0x4c34900000000000ULL,
        0x420e880000000000ULL, 0x630bcc0000000000ULL, 0xf7ad6a0000000000ULL, 0xad73950000000000ULL,
        0x7780078000000000ULL, 0x6d4004c000000000ULL, 0xd7a0042000000000ULL, 0x3d70063000000000ULL,
        0x2f880f7800000000ULL, 0xb1640ad400000000ULL, 0xcdb6077a00000000ULL, 0x824706d700000000ULL,
        0xc20e8d7880000000ULL, 0xa30bc3d640000000ULL, 0x57ad62fb60000000ULL, 0xfd739b1470000000ULL,
        0x8f8004d8e8000000ULL, 0xe1400424bc000000ULL, 0x35a00620d6000000ULL, 0x0e700f3039000000ULL,
        0x20080af880800000ULL, 0x9024071640c00000ULL, 0x581606db60a00000ULL, 0xdc370d2470500000ULL,
        0x1a0683a0e8f80000ULL, 0xbf2fc2f0bc8c0000ULL, 0xedbb6b5ad6e20000ULL, 0x12449ce739330000ULL,
        0x9a068000008f8000ULL, 0x7f2fc00000e14000ULL, 0x4dbb60000035a000ULL, 0x42449000000e7000ULL,
        0x6206880000200800ULL, 0xf32fcc0000902400ULL, 0xafbb6a0000581600ULL, 0x7144950000dc3700ULL,
        0x6d868780001a0680ULL, 0xd26fc4c000bf2fc0ULL, 0x3a1b642000edbb60ULL, 0x2f34963000124490ULL,
        0xb58e8778009a0688ULL, 0xce4bc6d4007f2fccULL, 0x800d6d7a004dbb6aULL, 0xc00393d700424495ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0x6000000000000000ULL, 0x9000000000000000ULL,
        0x3800000000000000ULL, 0xc400000000000000ULL, 0x4200000000000000ULL, 0xa300000000000000ULL,
        0xf180000000000000ULL, 0xaa40000000000000ULL, 0xfce0000000000000ULL, 0x8510000000000000ULL,
        0xe008000000000000ULL, 0x500c000000000000ULL, 0x5806000000000000ULL, 0x5409000000000000ULL,
        0x7a03800000000000ULL, 0x670c400000000000ULL, 0xb384200000000000ULL, 0x094a300000000000ULL,
        0x0d6f180000000000ULL, 0x2f5aa40000000000ULL, 0x1ce7ce0000000000ULL, 0xd514510000000000ULL,
        0xb800008000000000ULL, 0x040000c000000000ULL, 0x2200006000000000ULL, 0x3300009000000000ULL,
        0xc980003800000000ULL, 0x6e4000c400000000ULL, 0xbee0004200000000ULL, 0x261000a300000000ULL,
        0x118800f180000000ULL, 0xfa4c00aa40000000ULL, 0xa4e600fce0000000ULL, 0xd119008510000000ULL,
        0x9a0b80e008000000ULL, 0x370040500c000000ULL, 0xeb82205806000000ULL, 0x5d43305409000000ULL,
        0x776c987a03800000ULL, 0x4856e4670c400000ULL, 0xaf63eeb384200000ULL, 0xdc5e61094a300000ULL,
        0xb56f188d6f180000ULL, 0x2b5aa4ef5aa40000ULL, 0x3ee7ce7ce7ce0000ULL, 0xe614514514510000ULL,
        0x7180000000008000ULL, 0x6a4000000000c000ULL, 0x9ce0000000006000ULL, 0x1510000000009000ULL,
        0xd808000000003800ULL, 0x940c00000000c400ULL, 0x1a06000000004200ULL, 0xf70900000000a300ULL,
        0x8b8380000000f180ULL, 0xcd4c40000000aa40ULL, 0x4f6420000000fce0ULL, 0x8c5a300000008510ULL,
        0xed6718000000e008ULL, 0x7f56a4000000500cULL, 0x44e1ce0000005806ULL, 0x811d510000005409ULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0x2000000000000000ULL, 0xf000000000000000ULL,
        0xa800000000000000ULL, 0x5400000000000000ULL, 0x9a00000000000000ULL, 0x9d00000000000000ULL,
        0x1e80000000000000ULL, 0x5cc0000000000000ULL, 0x7d20000000000000ULL, 0x8d10000000000000ULL,
        0x2488000000000000ULL, 0x71c4000000000000ULL, 0xeba2000000000000ULL, 0x75df000000000000ULL,
        0x6ba2800000000000ULL, 0x35d1400000000000ULL, 0x4ba3a00000000000ULL, 0xc5d2d00000000000ULL,
        0xe3a1680000000000ULL, 0x91db8c0000000000ULL, 0x79aef20000000000ULL, 0x0cdf410000000000ULL,
        0x672a808000000000ULL, 0x5015404000000000ULL, 0x1a01a02000000000ULL, 0xdd0dd0f000000000ULL,
        0x3e83e8a800000000ULL, 0xaccacc5400000000ULL, 0xd52d529a00000000ULL, 0xd91d919d00000000ULL,
        0xbe83e89e80000000ULL, 0xeccacc1cc0000000ULL, 0xf52d525d20000000ULL, 0x291d917d10000000ULL,
        0x1683e80c88000000ULL, 0xb8cacc65c4000000ULL, 0x6f2d5251a2000000ULL, 0xb41d9118df000000ULL,
        0x0803e85d22800000ULL, 0xe40acc7d11400000ULL, 0x120d528c83a00000ULL, 0x390d9125c2d00000ULL,
        0x2c8be8f1a9680000ULL, 0x95cecca8df8c0000ULL, 0xf9af52552cf20000ULL, 0x4cd2919910410000ULL,
        0x4729681e80008000ULL, 0xa01f8c5cc0004000ULL, 0xb20cf27d20002000ULL, 0x8900418d1000f000ULL,
        0xa48800a48800a800ULL, 0x31c40031c4005400ULL, 0xcba200cba2009a00ULL, 0x85df0085df009d00ULL,
        0xc3a280c3a2801e80ULL, 0x61d14061d1405cc0ULL, 0xd1a3a0d1a3a07d20ULL, 0x58d2d058d2d08d10ULL,
        0xfd2168fd21682488ULL, 0xcd1b8ccd1b8c71c4ULL, 0x048ef2048ef2eba2ULL, 0x81cf4181cf4175dfULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0x2000000000000000ULL, 0xd000000000000000ULL,
        0xd800000000000000ULL, 0xc400000000000000ULL, 0x4600000000000000ULL, 0x8500000000000000ULL,
        0xa580000000000000ULL, 0x76c0000000000000ULL, 0xada0000000000000ULL, 0x6ab0000000000000ULL,
        0x2da8000000000000ULL, 0xaabc000000000000ULL, 0x0daa000000000000ULL, 0x7ab1000000000000ULL,
        0xd5a7800000000000ULL, 0xbebd400000000000ULL, 0x93a3e00000000000ULL, 0x3bb5100000000000ULL,
        0x3629b80000000000ULL, 0x4d727c0000000000ULL, 0x9b83620000000000ULL, 0x27c4d70000000000ULL,
        0xb629b88000000000ULL, 0x8d727cc000000000ULL, 0xbb83622000000000ULL, 0xf7c4d7d000000000ULL,
        0x6e29b85800000000ULL, 0x49727c0400000000ULL, 0xfd83626600000000ULL, 0x72c4d75500000000ULL,
        0xcba9b8fd80000000ULL, 0x3fb27c72c0000000ULL, 0x502362cba0000000ULL, 0x1874d73fb0000000ULL,
        0xe601b8d028000000ULL, 0x950e7cd87c000000ULL, 0x5d8962c60a000000ULL, 0x62c5d74501000000ULL,
        0x33a638058f800000ULL, 0x2bb33c66c1400000ULL, 0xce2a8255a9e00000ULL, 0x5970c77eb4100000ULL,
        0x058f8033a6380000ULL, 0x66c1402bb33c0000ULL, 0x55a9e0ce2a820000ULL, 0x7eb4105970c70000ULL,
        0xb3a638058f808000ULL, 0xebb33c66c140c000ULL, 0xee2a8255a9e02000ULL, 0x8970c77eb410d000ULL,
        0xdd8f8033a638d800ULL, 0xa2c1402bb33cc400ULL, 0x13a9e0ce2a824600ULL, 0xfbb4105970c78500ULL,
        0x162638058f802580ULL, 0x9d733c66c140b6c0ULL, 0x438a8255a9e08da0ULL, 0xe3c0c77eb410bab0ULL,
        0xf0278033a638f5a8ULL, 0x087d402bb33c6ebcULL, 0x1e03e0ce2a824baaULL, 0x8105105970c7ffb1ULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0x2000000000000000ULL, 0xf000000000000000ULL,
        0x3800000000000000ULL, 0x1400000000000000ULL, 0xf600000000000000ULL, 0x6700000000000000ULL,
        0x8f80000000000000ULL, 0x5040000000000000ULL, 0x8aa0000000000000ULL, 0x0ff0000000000000ULL,
        0x12a8000000000000ULL, 0xabf4000000000000ULL, 0xfcaa000000000000ULL, 0x28fb000000000000ULL,
        0xbd29800000000000ULL, 0x0bba400000000000ULL, 0x4e06e00000000000ULL, 0x330c300000000000ULL,
        0x5986180000000000ULL, 0xc74d340000000000ULL, 0x3d2cb20000000000ULL, 0x4bb2cb0000000000ULL,
        0x6e06188000000000ULL, 0xc30d344000000000ULL, 0x618cb22000000000ULL, 0xd342cbf000000000ULL,
        0xcb2e18b800000000ULL, 0x2cb9345400000000ULL, 0xe186b2d600000000ULL, 0x9349cb9700000000ULL,
        0xeb2f983780000000ULL, 0xdcb7740440000000ULL, 0xd98a525ca0000000ULL, 0x874efb98f0000000ULL,
        0x1d28002528000000ULL, 0xbbb400afb4000000ULL, 0x560a00a00a000000ULL, 0xd70b00b00b000000ULL,
        0x9781801801800000ULL, 0xb44e40e40e400000ULL, 0x44ace0ce0ce00000ULL, 0x7cf7307307300000ULL,
        0x6b2f987987980000ULL, 0x9cb7743743740000ULL, 0xf98a520520520000ULL, 0x774efb5fb5fb0000ULL,
        0x2528001801808000ULL, 0xafb400e40e404000ULL, 0xa00a00ce0ce02000ULL, 0xb00b00730730f000ULL,
        0x1801807987983800ULL, 0xe40e403743741400ULL, 0xce0ce0052052f600ULL, 0x7307305fb5fb6700ULL,
        0x7987989801800f80ULL, 0x374374a40e401040ULL, 0x052052ee0ce0aaa0ULL, 0x5fb5fb830730fff0ULL,
        0x980180c187982aa8ULL, 0xa40e40634374bff4ULL, 0xee0ce0d320520aaaULL, 0x830730c8b5fb4ffbULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0x2000000000000000ULL, 0xf000000000000000ULL,
        0x6800000000000000ULL, 0x6400000000000000ULL, 0x3600000000000000ULL, 0x6d00000000000000ULL,
        0x4180000000000000ULL, 0xe040000000000000ULL, 0xd2e0000000000000ULL, 0x9bf0000000000000ULL,
        0x0ce8000000000000ULL, 0x52fc000000000000ULL, 0x5b6a000000000000ULL, 0x2fb3000000000000ULL,
        0xa00c800000000000ULL, 0x3005400000000000ULL, 0x4807e00000000000ULL, 0x940f900000000000ULL,
        0x5e01f80000000000ULL, 0x090e940000000000ULL, 0x778a560000000000ULL, 0x8d416b0000000000ULL,
        0x9369f88000000000ULL, 0x7bb294c000000000ULL, 0xde00562000000000ULL, 0xc9026bf000000000ULL,
        0x578d78e800000000ULL, 0x7d4bd4a400000000ULL, 0xfb6db61600000000ULL, 0x1fbefb9d00000000ULL,
        0xe80000a980000000ULL, 0xa400004440000000ULL, 0x160000c4e0000000ULL, 0x9d000006f0000000ULL,
        0x2980002568000000ULL, 0x844000d6bc000000ULL, 0xe4e000bf8a000000ULL, 0xf6f000d943000000ULL,
        0x4d6800ed64800000ULL, 0xb2bc0082b9400000ULL, 0x898a00c18de00000ULL, 0xb44300204c900000ULL,
        0xace480f2e5780000ULL, 0x62f9406bf7d40000ULL, 0x136de064e7b60000ULL, 0xbbbc9036fdfb0000ULL,
        0xfe0d786d64808000ULL, 0x390bd442b940c000ULL, 0x3f8db6e18de02000ULL, 0x194efbd04c90f000ULL,
        0xcd68001ae5786800ULL, 0x72bc00cff7d46400ULL, 0xa98a0072e7b63600ULL, 0x444300abfdfb6d00ULL,
        0xc4e48044e480c180ULL, 0x06f940c6f9402040ULL, 0x256de0056de0f2e0ULL, 0xd6bc9026bc906bf0ULL,
        0xbf8d78d78d7864e8ULL, 0xd94bd4bd4bd436fcULL, 0xed6db6db6db66d6aULL, 0x82befbefbefb42b3ULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0xa000000000000000ULL, 0x5000000000000000ULL,
        0x9800000000000000ULL, 0xf400000000000000ULL, 0xae00000000000000ULL, 0xbb00000000000000ULL,
        0xe780000000000000ULL, 0x95c0000000000000ULL, 0x1c20000000000000ULL, 0xd030000000000000ULL,
        0xdba8000000000000ULL, 0x55f4000000000000ULL, 0xff82000000000000ULL, 0x21c1000000000000ULL,
        0x1223800000000000ULL, 0x3b3a400000000000ULL, 0xa42b600000000000ULL, 0x3430f00000000000ULL,
        0x4da6980000000000ULL, 0x4af3ec0000000000ULL, 0x2e043a0000000000ULL, 0xfb0a1f0000000000ULL,
        0x4785188000000000ULL, 0xc5c9ac4000000000ULL, 0x842f5aa000000000ULL, 0x243aef5000000000ULL,
        0x75a3801800000000ULL, 0xeefa40b400000000ULL, 0x180b600e00000000ULL, 0xb400f0eb00000000ULL,
        0x0e0e987f80000000ULL, 0xeb07ec61c0000000ULL, 0x7f863ab220000000ULL, 0x61cb1f6b30000000ULL,
        0xb22698bc28000000ULL, 0x6b33ec8034000000ULL, 0x3c243a43a2000000ULL, 0xc03a1fa1f1000000ULL,
        0xe3ad18d18b800000ULL, 0xf1fdacdace400000ULL, 0xc98d5a55a9600000ULL, 0x6ecbeffef1f00000ULL,
        0x5ba800a005180000ULL, 0x15f4005009ac0000ULL, 0x5f8200980f5a0000ULL, 0x71c100f40aef0000ULL,
        0x8a2380ae0b808000ULL, 0xcf3a40bb0e404000ULL, 0x0a2b60e78960a000ULL, 0x8f30f095c1f05000ULL,
        0xaa26981c2d189800ULL, 0xdf33ecd03dacf400ULL, 0x32243adbad5aae00ULL, 0x2b3a1f55fbefbb00ULL,
        0x9c2d187f80006780ULL, 0x903dac61c000d5c0ULL, 0x7bad5ab22000bc20ULL, 0x05fbef6b30008030ULL,
        0x678000bc280043a8ULL, 0xd5c000803400a1f4ULL, 0xbc200043a2005182ULL, 0x803000a1f1009ac1ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0xe000000000000000ULL, 0xb000000000000000ULL,
        0xb800000000000000ULL, 0x3c00000000000000ULL, 0xce00000000000000ULL, 0x4100000000000000ULL,
        0x2180000000000000ULL, 0x51c0000000000000ULL, 0x0960000000000000ULL, 0x8570000000000000ULL,
        0xf278000000000000ULL, 0x8e9c000000000000ULL, 0x6002000000000000ULL, 0x7003000000000000ULL,
        0x5803800000000000ULL, 0x8c02c00000000000ULL, 0x7602e00000000000ULL, 0x7d00f00000000000ULL,
        0xef83380000000000ULL, 0x10c1040000000000ULL, 0x28e0860000000000ULL, 0xd4b1470000000000ULL,
        0xfb18258000000000ULL, 0x0bee15c000000000ULL, 0x9279c9e000000000ULL, 0xfe9d3a7000000000ULL,
        0x3800000800000000ULL, 0xfc00000c00000000ULL, 0x2e00000e00000000ULL, 0xf100000b00000000ULL,
        0x9980000b80000000ULL, 0x6dc00003c0000000ULL, 0xc760000ce0000000ULL, 0xc470000410000000ULL,
        0xd3f8000218000000ULL, 0xdf5c00051c000000ULL, 0x6962000096000000ULL, 0xf573000857000000ULL,
        0xaa7b800f27800000ULL, 0x029ec008e9c00000ULL, 0x1600e00600200000ULL, 0x0d03f00700300000ULL,
        0xb780b80580380000ULL, 0x9cc3c408c02c0000ULL, 0x5ee26607602e0000ULL, 0xa9b1b707d00f0000ULL,
        0x149b1d8ef8338000ULL, 0x1b2f11c10c104000ULL, 0xba994fe28e086000ULL, 0x2a2c7d7d4b147000ULL,
        0xc3182587b1825800ULL, 0xf7ee15ccbee15c00ULL, 0xbc79c9e7279c9e00ULL, 0x0f9d3a74e9d3a700ULL,
        0xa180000000000080ULL, 0x91c00000000000c0ULL, 0xe9600000000000e0ULL, 0x35700000000000b0ULL,
        0x4a780000000000b8ULL, 0xb29c00000000003cULL, 0xae020000000000ceULL, 0x3103000000000041ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0xe000000000000000ULL, 0xd000000000000000ULL,
        0x6800000000000000ULL, 0x3c00000000000000ULL, 0x8a00000000000000ULL, 0x5100000000000000ULL,
        0xa980000000000000ULL, 0xddc0000000000000ULL, 0x5ba0000000000000ULL, 0x39d0000000000000ULL,
        0x95f8000000000000ULL, 0x56d4000000000000ULL, 0x0a02000000000000ULL, 0x9103000000000000ULL,
        0x4983800000000000ULL, 0x0dc3400000000000ULL, 0x33a1a00000000000ULL, 0x05d0f00000000000ULL,
        0x1ffa280000000000ULL, 0x07d5440000000000ULL, 0xa380a60000000000ULL, 0x4cc0770000000000ULL,
        0x1222ee8000000000ULL, 0x3413a74000000000ULL, 0xa65bf7e000000000ULL, 0x5305ab5000000000ULL,
        0x15f8000800000000ULL, 0x96d4000c00000000ULL, 0xea02000e00000000ULL, 0x4103000d00000000ULL,
        0x2183800680000000ULL, 0x31c34003c0000000ULL, 0xb9a1a008a0000000ULL, 0x54d0f00510000000ULL,
        0xb67a280a98000000ULL, 0xda15440ddc000000ULL, 0xf820a605ba000000ULL, 0x751077039d000000ULL,
        0x87daee895f800000ULL, 0x62c7a7456d400000ULL, 0xac59f7e0a0200000ULL, 0xc206ab5910300000ULL,
        0x5c7b800c98380000ULL, 0x9b17400cdc340000ULL, 0xd9a3a00d3a1a0000ULL, 0x44d3f00d5d0f0000ULL,
        0x3e79a8077fa28000ULL, 0x36160403bd544000ULL, 0x1a210602980a6000ULL, 0x18108701dc077000ULL,
        0xa458c68bba2ee800ULL, 0xee06e34e9d3a7400ULL, 0x5e7b51efdfbf7e00ULL, 0x2615dc56ad5ab500ULL,
        0x9222ee8000000080ULL, 0xf413a740000000c0ULL, 0x465bf7e0000000e0ULL, 0x8305ab50000000d0ULL,
        0x7df8000800000068ULL, 0xaad4000c0000003cULL, 0x6002000e0000008aULL, 0x1003000d00000051ULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0x6000000000000000ULL, 0xd000000000000000ULL,
        0x3800000000000000ULL, 0x8c00000000000000ULL, 0x7e00000000000000ULL, 0x7100000000000000ULL,
        0xc880000000000000ULL, 0x04c0000000000000ULL, 0x1ba0000000000000ULL, 0xbb70000000000000ULL,
        0x4a98000000000000ULL, 0xc3bc000000000000ULL, 0xa602000000000000ULL, 0x6d01000000000000ULL,
        0xee81800000000000ULL, 0x29c3400000000000ULL, 0x9520e00000000000ULL, 0x42b2300000000000ULL,
        0xe7b9f80000000000ULL, 0x0d0dc40000000000ULL, 0x3fb9220000000000ULL, 0x110d130000000000ULL,
        0x19bbee8000000000ULL, 0x3c0cadc000000000ULL, 0x973a4a6000000000ULL, 0xc5cf7ef000000000ULL,
        0x3a18000800000000ULL, 0x0b7c000400000000ULL, 0xa3a2000600000000ULL, 0x7771000d00000000ULL,
        0x5499800380000000ULL, 0x62bf4008c0000000ULL, 0x5682e007e0000000ULL, 0xe5c3300710000000ULL,
        0x8b20780c88000000ULL, 0xe3b284004c000000ULL, 0x173bc201ba000000ULL, 0x85ce230bb7000000ULL,
        0x5a1b9684a9800000ULL, 0xdb7e29cc3bc00000ULL, 0x9ba1886a60200000ULL, 0xfb715df6d0100000ULL,
        0x2a9b9686e8180000ULL, 0x13be29c69c340000ULL, 0x9e01886f520e0000ULL, 0xe1015df92b230000ULL,
        0x90839685fb9f8000ULL, 0x58c229cc10dc4000ULL, 0x5da388621b922000ULL, 0x46705dfb00d13000ULL,
        0xfc1a168693bee800ULL, 0xb67d69cf4ccadc00ULL, 0x7521686929a4a600ULL, 0xd2b36dfdfbf7ef00ULL,
        0xbfba6e8000000080ULL, 0x510fedc000000040ULL, 0x79baaa6000000060ULL, 0xec0d4ef0000000d0ULL,
        0xaf39f80800000038ULL, 0x49cdc4040000008cULL, 0x441922060000007eULL, 0x7a7d130d00000071ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0xa000000000000000ULL, 0x9000000000000000ULL,
        0x0800000000000000ULL, 0x6400000000000000ULL, 0x6a00000000000000ULL, 0x8900000000000000ULL,
        0xa580000000000000ULL, 0xcb40000000000000ULL, 0x1820000000000000ULL, 0xad90000000000000ULL,
        0xaf88000000000000ULL, 0x72f4000000000000ULL, 0x2582000000000000ULL, 0x0b43000000000000ULL,
        0xb822800000000000ULL, 0x3d92400000000000ULL, 0xa788200000000000ULL, 0x16f5900000000000ULL,
        0x4f83a80000000000ULL, 0x8241240000000000ULL, 0x1da0160000000000ULL, 0xf6d16d0000000000ULL,
        0xbfa8408000000000ULL, 0xbb67264000000000ULL, 0xe009162000000000ULL, 0xf0b4efd000000000ULL,
        0x3822800800000000ULL, 0xfd92400c00000000ULL, 0x0788200a00000000ULL, 0x86f5900900000000ULL,
        0x4783a80080000000ULL, 0xe641240640000000ULL, 0x77a01606a0000000ULL, 0x7fd16d0890000000ULL,
        0x1a28408a58000000ULL, 0x7027264cb4000000ULL, 0xf829162182000000ULL, 0x5d24efdad9000000ULL,
        0x97aa8002f8800000ULL, 0x8f66400b2f400000ULL, 0x220a200858200000ULL, 0x8db69009b4300000ULL,
        0xffa1280b02280000ULL, 0xdbd3640599240000ULL, 0xd028360cd8820000ULL, 0x6924fd09ff590000ULL,
        0x55abe88ea03a8000ULL, 0xf266024490124000ULL, 0xe589002058016000ULL, 0xabf582d5b416d000ULL,
        0x2802c08902040800ULL, 0x3401664099326400ULL, 0xc203362658b16200ULL, 0x7d027fd6bf7efd00ULL,
        0xc783a80080000080ULL, 0x26412406400000c0ULL, 0xd7a01606a00000a0ULL, 0xefd16d0890000090ULL,
        0x1228408a58000008ULL, 0x1427264cb4000064ULL, 0x922916218200006aULL, 0xd424efdad9000089ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0x2000000000000000ULL, 0xd000000000000000ULL,
        0x4800000000000000ULL, 0x8c00000000000000ULL, 0xd600000000000000ULL, 0x3900000000000000ULL,
        0xd580000000000000ULL, 0x3240000000000000ULL, 0xb2a0000000000000ULL, 0x7210000000000000ULL,
        0x53d8000000000000ULL, 0x82cc000000000000ULL, 0xcb82000000000000ULL, 0x4743000000000000ULL,
        0x9120800000000000ULL, 0xa953400000000000ULL, 0x7cf9200000000000ULL, 0x4e9e300000000000ULL,
        0xfcf9580000000000ULL, 0x8e9fe40000000000ULL, 0xdcf9d60000000000ULL, 0x5e9c890000000000ULL,
        0x94f96a8000000000ULL, 0xd29fb84000000000ULL, 0x42f9b76000000000ULL, 0xeb9c9f3000000000ULL,
        0x9778800800000000ULL, 0xd9df400c00000000ULL, 0x25db200200000000ULL, 0xabcd300d00000000ULL,
        0x7601d80480000000ULL, 0x2900a408c0000000ULL, 0xbd82f60d60000000ULL, 0x6e41b90390000000ULL,
        0x2ca0b28d58000000ULL, 0xc7131c4324000000ULL, 0x5059416b2a000000ULL, 0x898e263721000000ULL,
        0xaca0b28d3d800000ULL, 0x07131c442cc00000ULL, 0x7059416eb8200000ULL, 0x598e263974300000ULL,
        0xe4a0b28592080000ULL, 0x8b131c4e55340000ULL, 0xa6594168af920000ULL, 0x608e263a79e30000ULL,
        0x3120b28e17958000ULL, 0xb9531c4f0dfe4000ULL, 0x14f94169859d6000ULL, 0x129e263c58c89000ULL,
        0x62f8b28daa16a800ULL, 0x3b9f1c42e13b8400ULL, 0xdf7b416cddbb7600ULL, 0x55dd26337cf9f300ULL,
        0xf3d8328480000080ULL, 0x92cc5c48c00000c0ULL, 0xa382616d60000020ULL, 0x1b431633900000d0ULL,
        0x0f216a8558000048ULL, 0x1c53b84f2400008cULL, 0x7f7bb7692a0000d6ULL, 0x45df9f3a21000039ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0x2000000000000000ULL, 0x5000000000000000ULL,
        0xd800000000000000ULL, 0xf400000000000000ULL, 0x3e00000000000000ULL, 0x9500000000000000ULL,
        0x8f80000000000000ULL, 0x3d40000000000000ULL, 0xf320000000000000ULL, 0x2ef0000000000000ULL,
        0xadc8000000000000ULL, 0x0a0c000000000000ULL, 0x8b22000000000000ULL, 0x4af3000000000000ULL,
        0x6bc8800000000000ULL, 0x3b0d400000000000ULL, 0xe2a1600000000000ULL, 0x16b0d00000000000ULL,
        0x2968780000000000ULL, 0xbdbf140000000000ULL, 0x33cb5e0000000000ULL, 0x0f0c250000000000ULL,
        0xfca1b48000000000ULL, 0xd3b0afc000000000ULL, 0x7eeb692000000000ULL, 0x74fe4d3000000000ULL,
        0xfee8780800000000ULL, 0xb4ff140c00000000ULL, 0xdeeb5e0200000000ULL, 0xe4fc250500000000ULL,
        0x06e9b48d80000000ULL, 0x10fcafcf40000000ULL, 0x38e96923e0000000ULL, 0x85fd4d3950000000ULL,
        0xb768f800f8000000ULL, 0xb8be540fd4000000ULL, 0x44483e0d32000000ULL, 0x964ff507ef000000ULL,
        0xe9814c875c800000ULL, 0x9c42fbcfe0c00000ULL, 0x62a1572b52200000ULL, 0xd6b2b83dff300000ULL,
        0x0969b48644880000ULL, 0xedbcafcc64d40000ULL, 0xebc9692318160000ULL, 0xfb0d4d36840d0000ULL,
        0xc2a0f80dca078000ULL, 0x46b254083b314000ULL, 0xf16a3e0a6e95e000ULL, 0x49bcf5080ff25000ULL,
        0x0dc9cc8c0e934800ULL, 0x9a0fbbc21fdefc00ULL, 0x7320372516a09200ULL, 0xeef2683d9be9d300ULL,
        0x8dc9cc875c800080ULL, 0x5a0fbbcfe0c000c0ULL, 0x5320372b52200020ULL, 0xbef2683dff300050ULL,
        0x55c9cc86448800d8ULL, 0xae0fbbcc64d400f4ULL, 0x6d2037231816003eULL, 0x2bf26836840d0095ULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0xa000000000000000ULL, 0xb000000000000000ULL,
        0x9800000000000000ULL, 0xa400000000000000ULL, 0x7a00000000000000ULL, 0xd500000000000000ULL,
        0x0280000000000000ULL, 0x6040000000000000ULL, 0x51e0000000000000ULL, 0x8870000000000000ULL,
        0x8c28000000000000ULL, 0x47c4000000000000ULL, 0x0be2000000000000ULL, 0xad71000000000000ULL,
        0xb6aa800000000000ULL, 0x3386c00000000000ULL, 0xb800600000000000ULL, 0x5403900000000000ULL,
        0x4203680000000000ULL, 0xc101940000000000ULL, 0xe0826a0000000000ULL, 0x1143110000000000ULL,
        0x2960af8000000000ULL, 0x3d3175c000000000ULL, 0xdf4a3aa000000000ULL, 0xaff49e1000000000ULL,
        0xd62b680800000000ULL, 0x62c5940400000000ULL, 0x31606a0a00000000ULL, 0xd932110b00000000ULL,
        0x054a2f8980000000ULL, 0xcaf7b5ca40000000ULL, 0x4caa5aa7a0000000ULL, 0xa6870e1d50000000ULL,
        0x1a80000828000000ULL, 0x8440000204000000ULL, 0x8be0000f1e000000ULL, 0xed70000387000000ULL,
        0x16a8000142800000ULL, 0x8384000e3c400000ULL, 0x200200071e200000ULL, 0xf001000787100000ULL,
        0x3802800b42a80000ULL, 0x1402c0053c6c0000ULL, 0xe202600e9e060000ULL, 0x7102900dc7390000ULL,
        0x7881e80ce2b68000ULL, 0xb54354086c594000ULL, 0x53600a0eb606a000ULL, 0xe831810bc3211000ULL,
        0xddc94789fca2f800ULL, 0xcfb621c0eb7b5c00ULL, 0x87c830a674a5aa00ULL, 0xeab41f1fbf70e100ULL,
        0xbd48af8142800080ULL, 0x9ef575ce3c400040ULL, 0x0ea83aa71e2000a0ULL, 0x67859e17871000b0ULL,
        0xfa01e80342a80098ULL, 0x950354013c6c00a4ULL, 0xa2800a049e06007aULL, 0xd0418106c73900d5ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0xa000000000000000ULL, 0x3000000000000000ULL,
        0x1800000000000000ULL, 0x3400000000000000ULL, 0x8a00000000000000ULL, 0x9d00000000000000ULL,
        0x6780000000000000ULL, 0x8240000000000000ULL, 0x40e0000000000000ULL, 0x60f0000000000000ULL,
        0x9148000000000000ULL, 0x2944000000000000ULL, 0x2d62000000000000ULL, 0xbfb3000000000000ULL,
        0x162a800000000000ULL, 0xfbf4c00000000000ULL, 0xe4ca600000000000ULL, 0xc207d00000000000ULL,
        0x2002a80000000000ULL, 0xf001b40000000000ULL, 0xb8037e0000000000ULL, 0x0402190000000000ULL,
        0x92034b8000000000ULL, 0xa90327c000000000ULL, 0xed81f32000000000ULL, 0x1f40d81000000000ULL,
        0x2760280800000000ULL, 0xe2b1740c00000000ULL, 0xd1ab1e0a00000000ULL, 0x49b6c90300000000ULL,
        0xbc2b638180000000ULL, 0x96f653c340000000ULL, 0x3b48ed28a0000000ULL, 0x44451119d0000000ULL,
        0xf2e1cb8e78000000ULL, 0x39f3e7c424000000ULL, 0xc4c9932e0e000000ULL, 0x320408150f000000ULL,
        0x9800000094800000ULL, 0xf400000dd4400000ULL, 0x2a00000076200000ULL, 0xad0000012b300000ULL,
        0x7f8000069aa80000ULL, 0xb6400004db4c0000ULL, 0xcae00002e2a60000ULL, 0xfdf00003ff7d0000ULL,
        0xf6c8000d6caa8000ULL, 0xab040005b05b4000ULL, 0x6d82000d5817e000ULL, 0xdf43000db4119000ULL,
        0x87628001561cb800ULL, 0xd2b0c007bb3e7c00ULL, 0xc9a8600242993200ULL, 0x7db4d0062f408100ULL,
        0x3628280114800080ULL, 0x0bf5740e944000c0ULL, 0x5cc91e08d62000a0ULL, 0xc605c908fb300030ULL,
        0xb201e380e2a80018ULL, 0x590293ccff4c0034ULL, 0x55828d26eca6008aULL, 0x1b42c115f07d009dULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0xe000000000000000ULL, 0xd000000000000000ULL,
        0x0800000000000000ULL, 0x4c00000000000000ULL, 0x0200000000000000ULL, 0xb500000000000000ULL,
        0x3680000000000000ULL, 0xc2c0000000000000ULL, 0x1420000000000000ULL, 0x0750000000000000ULL,
        0x1bf8000000000000ULL, 0x5034000000000000ULL, 0x48a2000000000000ULL, 0xac91000000000000ULL,
        0xd35b800000000000ULL, 0xbca7400000000000ULL, 0x7bfa200000000000ULL, 0xc034300000000000ULL,
        0xa0a1880000000000ULL, 0x3090940000000000ULL, 0xd95b7a0000000000ULL, 0x45a57b0000000000ULL,
        0x4f7a788000000000ULL, 0xb7f6f94000000000ULL, 0x82013de000000000ULL, 0xf502dfd000000000ULL,
        0xd682080800000000ULL, 0x12c3d40400000000ULL, 0x1c235a0e00000000ULL, 0x4b504b0d00000000ULL,
        0x19f8708080000000ULL, 0xe5352d44c0000000ULL, 0x7e2267e020000000ULL, 0x6e5294db50000000ULL,
        0xc77a788b68000000ULL, 0xbbf6f9482c000000ULL, 0x60013def42000000ULL, 0x9002dfdd75000000ULL,
        0xe80208093f800000ULL, 0x9c03d405c3400000ULL, 0x0a035a0aaa200000ULL, 0xf9004b0c99100000ULL,
        0x3480708eddb80000ULL, 0x77c12d4326740000ULL, 0x22a067e6dda20000ULL, 0xc59394d726430000ULL,
        0x0fd9f880dd988000ULL, 0x5765b94e26494000ULL, 0x53591de65d97a000ULL, 0xfca7efd3e647b000ULL,
        0x9bf80000fd9f8800ULL, 0x10340005765b9400ULL, 0xa8a200053591de00ULL, 0x7c91000fca7efd00ULL,
        0xdb5b8009bf800080ULL, 0xf0a7400103400040ULL, 0x79fa200a8a2000e0ULL, 0x75343007c91000d0ULL,
        0x9621880db5b80008ULL, 0xf250940f0a74004cULL, 0xcd7b7a079fa20002ULL, 0x42f57b07534300b5ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0xe000000000000000ULL, 0x5000000000000000ULL,
        0x6800000000000000ULL, 0x4c00000000000000ULL, 0x7600000000000000ULL, 0xf700000000000000ULL,
        0x3680000000000000ULL, 0xd740000000000000ULL, 0x87e0000000000000ULL, 0xef30000000000000ULL,
        0xa3a8000000000000ULL, 0xd544000000000000ULL, 0x23aa000000000000ULL, 0x1547000000000000ULL,
        0xc3a9800000000000ULL, 0x4546400000000000ULL, 0xaba8200000000000ULL, 0x0947700000000000ULL,
        0xdda9f80000000000ULL, 0xfe44ac0000000000ULL, 0xeb29220000000000ULL, 0x2907f10000000000ULL,
        0x6ccb3d8000000000ULL, 0xc6344dc000000000ULL, 0xcf61b32000000000ULL, 0x137318d000000000ULL,
        0xeccb3d8800000000ULL, 0x06344dcc00000000ULL, 0x2f61b32e00000000ULL, 0x437318d500000000ULL,
        0x84cb3d8e80000000ULL, 0x4a344dc8c0000000ULL, 0x5961b32960000000ULL, 0xb47318da70000000ULL,
        0xb24b3d8de8000000ULL, 0x9d744dc5b4000000ULL, 0xde81b3211e000000ULL, 0x5b4318d483000000ULL,
        0x11e33d87d2800000ULL, 0x48304dc8e0400000ULL, 0xfd2bb32324a00000ULL, 0x4e0418d5d7700000ULL,
        0xd24abd8be8180000ULL, 0x0d760dccb4240000ULL, 0x568393299e220000ULL, 0x474368d543070000ULL,
        0x0fe3458632878000ULL, 0xf332a1c3506ec000ULL, 0xbdaab1272cb02000ULL, 0x6e4499d7d3781000ULL,
        0x63287800fe345800ULL, 0x3506ec0f332a1c00ULL, 0x72cb020bdaab1200ULL, 0x7d378106e4499d00ULL,
        0x8fe3458632878080ULL, 0x3332a1c3506ec0c0ULL, 0x5daab1272cb020e0ULL, 0x3e4499d7d3781050ULL,
        0x0b287800fe345868ULL, 0x7906ec0f332a1c4cULL, 0x04cb020bdaab1276ULL, 0x8a378106e4499df7ULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0x6000000000000000ULL, 0x9000000000000000ULL,
        0xc800000000000000ULL, 0x7400000000000000ULL, 0x5200000000000000ULL, 0x0300000000000000ULL,
        0xeb80000000000000ULL, 0x6f40000000000000ULL, 0x6460000000000000ULL, 0xdaf0000000000000ULL,
        0x1798000000000000ULL, 0x297c000000000000ULL, 0xa59a000000000000ULL, 0xfa7d000000000000ULL,
        0xe61b800000000000ULL, 0x713f400000000000ULL, 0x1878a00000000000ULL, 0xdcce900000000000ULL,
        0xb661e80000000000ULL, 0x99f29c0000000000ULL, 0x9c18460000000000ULL, 0xd63e210000000000ULL,
        0x09fa578000000000ULL, 0x548e0ac000000000ULL, 0xa380a9e000000000ULL, 0x5b413f3000000000ULL,
        0x5662578800000000ULL, 0x49f20ac400000000ULL, 0x341aa9e600000000ULL, 0x323c3f3900000000ULL,
        0x93f9d78480000000ULL, 0x238d4ac340000000ULL, 0x1a0209e320000000ULL, 0x3702af3930000000ULL,
        0xd9803f8a38000000ULL, 0xfc43d6c5b4000000ULL, 0x47e04fe566000000ULL, 0xc1b18e349f000000ULL,
        0x21f9e80b41800000ULL, 0xf08e9c0723c00000ULL, 0x5982460f3fa00000ULL, 0xbc43210b38d00000ULL,
        0x27e1d78d20380000ULL, 0x51b14ac430340000ULL, 0xe9f809e8b82a0000ULL, 0x848faf3ff4390000ULL,
        0x0b83bf82c6268000ULL, 0xbf4096ceef1dc000ULL, 0xcc62efe259ae6000ULL, 0x3ef21e3ba7db1000ULL,
        0x8d9b80006183f800ULL, 0x5e7f400a13fd6c00ULL, 0x1c18a00b07a4fe00ULL, 0x963e90038cc8e300ULL,
        0x69f9e802c6268080ULL, 0xc48e9c0eef1dc040ULL, 0x6b82460259ae6060ULL, 0x2f43210ba7db1090ULL,
        0x0461d7886183f8c8ULL, 0x4af14ace13fd6c74ULL, 0xdf9809ed07a4fe52ULL, 0x5d7faf3a8cc8e303ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0xa000000000000000ULL, 0xd000000000000000ULL,
        0xb800000000000000ULL, 0x0400000000000000ULL, 0x6e00000000000000ULL, 0x9700000000000000ULL,
        0xf280000000000000ULL, 0xedc0000000000000ULL, 0x1360000000000000ULL, 0x5c90000000000000ULL,
        0xdb58000000000000ULL, 0x31e4000000000000ULL, 0x09da000000000000ULL, 0xcc27000000000000ULL,
        0x02b8800000000000ULL, 0x44b4400000000000ULL, 0x0fe2600000000000ULL, 0xe650500000000000ULL,
        0x9ab9d80000000000ULL, 0x50b50c0000000000ULL, 0x79e2920000000000ULL, 0xa552fb0000000000ULL,
        0xbe38bf8000000000ULL, 0x2e77d94000000000ULL, 0xf6000ae000000000ULL, 0x830112d000000000ULL,
        0x84803f8800000000ULL, 0xaec3994c00000000ULL, 0x37e26aea00000000ULL, 0x225142dd00000000ULL,
        0x54b9e78380000000ULL, 0x17b6954c40000000ULL, 0x3360f8ece0000000ULL, 0x4c93b9d470000000ULL,
        0xc359580ca8000000ULL, 0xe5e54c029c000000ULL, 0xdfdaf20dd6000000ULL, 0x5f25ab01b9000000ULL,
        0x9e39e7891d800000ULL, 0x3e76954d82400000ULL, 0xee00f8e74ba00000ULL, 0x5703b9d07b700000ULL,
        0x5281580ab6080000ULL, 0x3dc14c0589040000ULL, 0xab60f20b55860000ULL, 0x5892ab0a6e750000ULL,
        0xb559678fb5958000ULL, 0xa6e6d5421e54c000ULL, 0xfb5898e11daf2000ULL, 0x21e4e9d1825ab000ULL,
        0x11d800054b9e7800ULL, 0x182400017b695400ULL, 0xd4ba0003360f8e00ULL, 0xd7b70004c93b9d00ULL,
        0x9360800c35958080ULL, 0x9c90400e5e54c0c0ULL, 0x7b58600dfdaf20a0ULL, 0xe1e75005f25ab0d0ULL,
        0xb1d95809e39e78b8ULL, 0xc8254c03e7695404ULL, 0x6cbaf20ee00f8e6eULL, 0xd3b5ab05703b9d97ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0xe000000000000000ULL, 0x3000000000000000ULL,
        0x6800000000000000ULL, 0xec00000000000000ULL, 0x2200000000000000ULL, 0x2b00000000000000ULL,
        0x3680000000000000ULL, 0x9d40000000000000ULL, 0x6a20000000000000ULL, 0x1670000000000000ULL,
        0x4de8000000000000ULL, 0x330c000000000000ULL, 0x936a000000000000ULL, 0x824f000000000000ULL,
        0x3b49800000000000ULL, 0x8f3fc00000000000ULL, 0x2820200000000000ULL, 0xcd70700000000000ULL,
        0xf36aa80000000000ULL, 0x724fdc0000000000ULL, 0xb34bf20000000000ULL, 0x533e690000000000ULL,
        0x62207a8000000000ULL, 0x0a7140c000000000ULL, 0xe7ea652000000000ULL, 0xc40d90f000000000ULL,
        0xefe9fa8800000000ULL, 0xd80e80cc00000000ULL, 0x45ea452e00000000ULL, 0x2f0de0f300000000ULL,
        0x396b528e80000000ULL, 0x754d5cc2c0000000ULL, 0x47cbb72c20000000ULL, 0xd57c89f1b0000000ULL,
        0x5682a80de8000000ULL, 0x6d43dc0b14000000ULL, 0xe221f20a82000000ULL, 0xca716900d7000000ULL,
        0x07e9fa8136800000ULL, 0xf40e80c424c00000ULL, 0x87ea452db4a00000ULL, 0x340de0fbf3f00000ULL,
        0x67eb528c02180000ULL, 0x040d5cce173c0000ULL, 0x0febb72316a20000ULL, 0xe80c89f694f70000ULL,
        0x2deaa806dcb28000ULL, 0xc30fdc0e27c1c000ULL, 0x1b6bf20ca01d2000ULL, 0x5e4e690070119000ULL,
        0x71487a8f48352800ULL, 0x483d40c86415cc00ULL, 0x3ca065234a1b7200ULL, 0x7b3290f673389f00ULL,
        0xafc87a885cb28080ULL, 0xf97d40cce7c1c0c0ULL, 0x94806520801d20e0ULL, 0x764290f1c0119030ULL,
        0xbca07a82a0352868ULL, 0xbb3140c37015ccecULL, 0x4fca6529c81b7222ULL, 0xc97d90f6a4389f2bULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0x2000000000000000ULL, 0x3000000000000000ULL,
        0x2800000000000000ULL, 0xd400000000000000ULL, 0x8a00000000000000ULL, 0xff00000000000000ULL,
        0x8480000000000000ULL, 0x73c0000000000000ULL, 0x1320000000000000ULL, 0xc2b0000000000000ULL,
        0xfb38000000000000ULL, 0x361c000000000000ULL, 0x401a000000000000ULL, 0xe0af000000000000ULL,
        0x1122800000000000ULL, 0x19b3c00000000000ULL, 0xfdb8200000000000ULL, 0x5edf900000000000ULL,
        0x75b8880000000000ULL, 0x7adfac0000000000ULL, 0xf7baba0000000000ULL, 0x61ddf30000000000ULL,
        0xd1387e8000000000ULL, 0x391e55c000000000ULL, 0xcc9ba86000000000ULL, 0x776cbeb000000000ULL,
        0xa000f68800000000ULL, 0xf001f9cc00000000ULL, 0x0801126200000000ULL, 0xe4014db300000000ULL,
        0xa200880a80000000ULL, 0x2b03ac0140000000ULL, 0x0e80ba0aa0000000ULL, 0x8cc2f30cf0000000ULL,
        0x97a2fe8ac8000000ULL, 0xb17195ca7c000000ULL, 0xe819886992000000ULL, 0xf4ac2eb3db000000ULL,
        0xbb22fe8ffb800000ULL, 0xd6b195c85dc00000ULL, 0x5139886733a00000ULL, 0xf91c2eb121f00000ULL,
        0xec9afe8421a80000ULL, 0x476d95c3bafc0000ULL, 0x880388617a220000ULL, 0x24032eb717090000ULL,
        0x82007e8481a08000ULL, 0x1b0255c04ac6c000ULL, 0x2681a86b3229a000ULL, 0x58c3beb32b263000ULL,
        0x1da27687338f6800ULL, 0x4e7239c121df9c00ULL, 0x6c99326c21b12600ULL, 0x876eddbfbae4db00ULL,
        0xa800000b7a208080ULL, 0x140000081706c0c0ULL, 0xaa00000c0189a020ULL, 0xcf0000020ad63030ULL,
        0xac80000312276828ULL, 0xa7c000029b239cd4ULL, 0x9920000d5b93268aULL, 0x3db00008adeddbffULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0xa000000000000000ULL, 0x5000000000000000ULL,
        0xb800000000000000ULL, 0x8400000000000000ULL, 0x1a00000000000000ULL, 0xaf00000000000000ULL,
        0xbd80000000000000ULL, 0xdfc0000000000000ULL, 0x14e0000000000000ULL, 0x4350000000000000ULL,
        0xda38000000000000ULL, 0x4e1c000000000000ULL, 0x4cda000000000000ULL, 0x364d000000000000ULL,
        0x2960800000000000ULL, 0xdc90400000000000ULL, 0x6ed8600000000000ULL, 0x5d4f500000000000ULL,
        0x2ee0880000000000ULL, 0xfc51ac0000000000ULL, 0x7fb81e0000000000ULL, 0x45dc830000000000ULL,
        0xfa3a458000000000ULL, 0x5e1d624000000000ULL, 0x54dbd36000000000ULL, 0xe24ec93000000000ULL,
        0x8b62cd8800000000ULL, 0xf790ce4400000000ULL, 0xc959cd6a00000000ULL, 0x2d8f4a3500000000ULL,
        0x8780080380000000ULL, 0x60c1ec0c40000000ULL, 0xb1607e0ba0000000ULL, 0x4893d30ff0000000ULL,
        0x6cdacd8058000000ULL, 0x264cce45bc000000ULL, 0x3163cd60ee000000ULL, 0x08924a3ec5000000ULL,
        0xccd8880e7b800000ULL, 0x764dac0d1dc00000ULL, 0x89621e0f83a00000ULL, 0x8c91830251d00000ULL,
        0xd6dac584b5880000ULL, 0xd94d224168c40000ULL, 0x34e3b36380260000ULL, 0x5351993c40250000ULL,
        0xc23a4583a0008000ULL, 0x9a1d624bf01ec000ULL, 0xeedbd36a5807e000ULL, 0x1d4ec930bc3d3000ULL,
        0x8ee2cd836e2cd800ULL, 0xac50ce42850ce400ULL, 0xc7b9cd6ddb9cd600ULL, 0xc1df4a36edf4a300ULL,
        0xe038080ddb808080ULL, 0xf11dec06eddec040ULL, 0xe95a7e05dba7e0a0ULL, 0x3d8ed302eded3050ULL,
        0x9f824d8fdba4d8b8ULL, 0xb4c08e47edc8e484ULL, 0x1361ad645bbad61aULL, 0x63901a3fadd1a3afULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0xe000000000000000ULL, 0x7000000000000000ULL,
        0x0800000000000000ULL, 0xf400000000000000ULL, 0xf600000000000000ULL, 0x8b00000000000000ULL,
        0xc980000000000000ULL, 0x5540000000000000ULL, 0x6720000000000000ULL, 0xf3f0000000000000ULL,
        0x3478000000000000ULL, 0x5744000000000000ULL, 0x1ada000000000000ULL, 0xb1f5000000000000ULL,
        0xa981800000000000ULL, 0x6540c00000000000ULL, 0x8f23a00000000000ULL, 0x77f2100000000000ULL,
        0xca7bf80000000000ULL, 0x2845fc0000000000ULL, 0x255afe0000000000ULL, 0x6fb6790000000000ULL,
        0x07233a8000000000ULL, 0xc3f25ac000000000ULL, 0xdc7aed6000000000ULL, 0xd34482d000000000ULL,
        0xe4d9428800000000ULL, 0xcef766c400000000ULL, 0x9603b36e00000000ULL, 0xbb00ebd700000000ULL,
        0x2181800880000000ULL, 0xd140c00b40000000ULL, 0x9923a00160000000ULL, 0x8cf2100fb0000000ULL,
        0x0bfbf80c18000000ULL, 0x8905fc0a14000000ULL, 0xb47afe0912000000ULL, 0x174679078f000000ULL,
        0xfadb3a8fdf800000ULL, 0xc1f65ac020400000ULL, 0xa180ed67dfa00000ULL, 0x914182d420500000ULL,
        0x7920c281df980000ULL, 0xfcf3a6c7204c0000ULL, 0x03fa13675f9a0000ULL, 0x7d07fbdb60710000ULL,
        0x427bf80ebfa78000ULL, 0x9c45fc0f9053c000ULL, 0x335afe0bc795e000ULL, 0x94b6790e34469000ULL,
        0xc6a33a80cd8c2800ULL, 0x62b25ac4af7a6c00ULL, 0x4d5aed6680013600ULL, 0xabb482dc402fbd00ULL,
        0x19214289e0278080ULL, 0xccf366c4f013c040ULL, 0xebf9b36d7835e0e0ULL, 0xf905ebd5a4169070ULL,
        0xbc78000d0a142808ULL, 0xe34400099b366cf4ULL, 0x0cda0008cd9b36f6ULL, 0x4af50000af5ebd8bULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0xe000000000000000ULL, 0x9000000000000000ULL,
        0x6800000000000000ULL, 0xf400000000000000ULL, 0x6200000000000000ULL, 0xdf00000000000000ULL,
        0x7980000000000000ULL, 0xdd40000000000000ULL, 0x76e0000000000000ULL, 0x2cf0000000000000ULL,
        0xcfb8000000000000ULL, 0x51ec000000000000ULL, 0xc8da000000000000ULL, 0x845d000000000000ULL,
        0x9b81800000000000ULL, 0x4243400000000000ULL, 0xef62200000000000ULL, 0x61b1900000000000ULL,
        0xd158280000000000ULL, 0x891cac0000000000ULL, 0x65626e0000000000ULL, 0x0ab1090000000000ULL,
        0x2adbbd8000000000ULL, 0x1b5d86c000000000ULL, 0x0201456000000000ULL, 0x0f03247000000000ULL,
        0xf182158800000000ULL, 0xb9426ac400000000ULL, 0x7ce10b6e00000000ULL, 0x07f3bd7900000000ULL,
        0xd439800e80000000ULL, 0x53af400b40000000ULL, 0xc7b8200820000000ULL, 0x75ec9004f0000000ULL,
        0x22d9a80118000000ULL, 0x3f5fec0294000000ULL, 0xe8004e014e000000ULL, 0xb400990f3f000000ULL,
        0x8203958b63800000ULL, 0x4f012ac8cac00000ULL, 0x11832b6be3a00000ULL, 0x29422d7a8ad00000ULL,
        0x14e1a80d43980000ULL, 0xf3f3ec053af40000ULL, 0xb63a4e0c7b820000ULL, 0x8cad99075ec90000ULL,
        0xbe3a15822d9a8000ULL, 0xa8ae6ac3f5fec000ULL, 0x543b0b6e8004e000ULL, 0x13aebd7b40099000ULL,
        0x27b8000020395800ULL, 0xe5ec0000f012ac00ULL, 0x4ada000f1832b600ULL, 0xcb5d000b9422d700ULL,
        0x8a018007ce1a8080ULL, 0x6b0340007f3ec040ULL, 0xfb82200d43a4e0e0ULL, 0x924190053ad99090ULL,
        0x6760280c7ba15868ULL, 0x05b0ac075ee6acf4ULL, 0xdb586e022db0b662ULL, 0xa21c0903f5ebd7dfULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0x6000000000000000ULL, 0x5000000000000000ULL,
        0x1800000000000000ULL, 0xdc00000000000000ULL, 0x4200000000000000ULL, 0x3700000000000000ULL,
        0x2080000000000000ULL, 0xf140000000000000ULL, 0x2860000000000000ULL, 0x9490000000000000ULL,
        0x8788000000000000ULL, 0xa83c000000000000ULL, 0x556a000000000000ULL, 0xe6ef000000000000ULL,
        0xf803800000000000ULL, 0x4c02400000000000ULL, 0x3a01e00000000000ULL, 0xbb02300000000000ULL,
        0x7a81680000000000ULL, 0x1a43ac0000000000ULL, 0x4ae18a0000000000ULL, 0x52d3190000000000ULL,
        0x8f68238000000000ULL, 0xcded974000000000ULL, 0xfa80bfa000000000ULL, 0xda43f2b000000000ULL,
        0x2ae2cb8800000000ULL, 0x02d07b4c00000000ULL, 0x976ad5a600000000ULL, 0x11eddbb500000000ULL,
        0xb880000980000000ULL, 0xed400001c0000000ULL, 0x0a60000220000000ULL, 0xf390000670000000ULL,
        0xbf08000388000000ULL, 0x857c0002d4000000ULL, 0x3f0a0006a6000000ULL, 0x457f000a39000000ULL,
        0x5f0b800a70800000ULL, 0x157e400597c00000ULL, 0x470be007d0a00000ULL, 0xc97d300727f00000ULL,
        0x050ae807f8b80000ULL, 0xfe7dec0e43e40000ULL, 0x258a6a06f6be0000ULL, 0x0f3e2905ded30000ULL,
        0x0deacb88282e8000ULL, 0x9bac7b45641ec000ULL, 0x8a60d5a70e06a000ULL, 0x3392dbbe9d129000ULL,
        0xdf0b80075e94b800ULL, 0xd57e40017ae3b400ULL, 0x270be00d06135a00ULL, 0x997d300d890ebb00ULL,
        0x1d0ae80bd8ae8080ULL, 0x227dec0133dec0c0ULL, 0x678a6a02fea6a060ULL, 0x383e290fcae29050ULL,
        0x2d6acb8b2e2cb818ULL, 0x6aec7b41ed07b4dcULL, 0xa200d5ab56ad5a42ULL, 0xa702dbb76eddbb37ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0x2000000000000000ULL, 0xf000000000000000ULL,
        0xf800000000000000ULL, 0x3400000000000000ULL, 0x6200000000000000ULL, 0xf500000000000000ULL,
        0xa880000000000000ULL, 0xfcc0000000000000ULL, 0x8e20000000000000ULL, 0x53f0000000000000ULL,
        0xc778000000000000ULL, 0x9574000000000000ULL, 0xb802000000000000ULL, 0xd4e5000000000000ULL,
        0xb280800000000000ULL, 0xfdc0c00000000000ULL, 0x64a0200000000000ULL, 0xaa30f00000000000ULL,
        0x19d8f80000000000ULL, 0x0e44340000000000ULL, 0x935a620000000000ULL, 0xe761f50000000000ULL,
        0x657a288000000000ULL, 0x40913cc000000000ULL, 0xe0022e2000000000ULL, 0xd0e563f000000000ULL,
        0x08809f7800000000ULL, 0xccc0917400000000ULL, 0x5620020200000000ULL, 0x97f0e5e500000000ULL,
        0x5d78800080000000ULL, 0x5474c000c0000000ULL, 0x7282200020000000ULL, 0xdd25f000f0000000ULL,
        0x94207800f8000000ULL, 0x52f0f40034000000ULL, 0x2df8420062000000ULL, 0x6cb40500f5000000ULL,
        0x66a25080a8800000ULL, 0x4fd5c8c0fcc00000ULL, 0x99d86c208e200000ULL, 0xce4466f053f00000ULL,
        0xb35a4ff8c7780000ULL, 0x176199b495740000ULL, 0x9d7a4e22b8020000ULL, 0x74917315d4e50000ULL,
        0x8202b7f832808000ULL, 0x25e5adb43dc0c000ULL, 0xa0002c2244a02000ULL, 0x300086155a30f000ULL,
        0xd8009f7861d8f800ULL, 0xc4009174fa443400ULL, 0x9a000202d15a6200ULL, 0xc100e5e5e261f500ULL,
        0xca808000b5fa2880ULL, 0x09c0c00048513cc0ULL, 0x26a020002c222e20ULL, 0xaf30f000861563f0ULL,
        0x4958f8009f789f78ULL, 0xc684340091749174ULL, 0x7f7a620002020202ULL, 0x4191f500e5e5e5e5ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0xa000000000000000ULL, 0xf000000000000000ULL,
        0xf800000000000000ULL, 0xec00000000000000ULL, 0x7e00000000000000ULL, 0x6100000000000000ULL,
        0x5c80000000000000ULL, 0xe6c0000000000000ULL, 0xdda0000000000000ULL, 0x2a70000000000000ULL,
        0x9338000000000000ULL, 0x13cc000000000000ULL, 0xd3ce000000000000ULL, 0x7379000000000000ULL,
        0x83a0800000000000ULL, 0x7b70c00000000000ULL, 0x97b8a00000000000ULL, 0xe90cf00000000000ULL,
        0x886ef80000000000ULL, 0xd409ec0000000000ULL, 0x3218fe0000000000ULL, 0xef7ca10000000000ULL,
        0xc556fc8000000000ULL, 0x56c516c000000000ULL, 0x4556a5a000000000ULL, 0x96c5067000000000ULL,
        0xe556cd3800000000ULL, 0x66c542cc00000000ULL, 0x1d56574e00000000ULL, 0x8ac549b900000000ULL,
        0x6356f80080000000ULL, 0xebc5ec00c0000000ULL, 0x3fd6fe00a0000000ULL, 0x0d05a100f0000000ULL,
        0xe2767c80f8000000ULL, 0x2775d6c0ec000000ULL, 0x714e05a07e000000ULL, 0x34b9f67061000000ULL,
        0xa28035385c800000ULL, 0x47c0aecce6c00000ULL, 0x2120a94edda00000ULL, 0x3cb0e8b92a700000ULL,
        0xb698848013380000ULL, 0xd5bc3ac0d3cc0000ULL, 0x3ef6fba073ce0000ULL, 0x01b5577083790000ULL,
        0x0ceec9b87ba08000ULL, 0xeec9b80c9770c000ULL, 0xc9b80ceee9b8a000ULL, 0xb80ceec9880cf000ULL,
        0x8ceec9b854eef800ULL, 0x2ec9b80cf2c9ec00ULL, 0x69b80cee4fb8fe00ULL, 0x480ceec9350ca100ULL,
        0x74eec9b82e6efc80ULL, 0xc2c9b80c690916c0ULL, 0x17b80cee4898a5a0ULL, 0x290ceec974bc0670ULL,
        0x286ec9b842764d38ULL, 0x2409b80cd77582ccULL, 0xca180cee894ef74eULL, 0x037ceec9d8b9b9b9ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0x2000000000000000ULL, 0xb000000000000000ULL,
        0x5800000000000000ULL, 0x2c00000000000000ULL, 0x9a00000000000000ULL, 0xf900000000000000ULL,
        0x3c80000000000000ULL, 0xb2c0000000000000ULL, 0xad20000000000000ULL, 0x3a30000000000000ULL,
        0x8998000000000000ULL, 0x448c000000000000ULL, 0x2eea000000000000ULL, 0x6f81000000000000ULL,
        0xef20800000000000ULL, 0x2f30c00000000000ULL, 0x0f18200000000000ULL, 0xbf4cb00000000000ULL,
        0xe74a580000000000ULL, 0xcb712c0000000000ULL, 0x51981a0000000000ULL, 0xa88c390000000000ULL,
        0x94ea1c8000000000ULL, 0x268102c000000000ULL, 0x8ba0752000000000ULL, 0xb1f0d63000000000ULL,
        0x3838339800000000ULL, 0x7c7c0d8c00000000ULL, 0x52524a6a00000000ULL, 0x3d3df14100000000ULL,
        0xd252580080000000ULL, 0xfd3d2c00c0000000ULL, 0xf2521a0020000000ULL, 0x4d3d3900b0000000ULL,
        0xaa529c8058000000ULL, 0x613dc2c02c000000ULL, 0x305255209a000000ULL, 0x983d6630f9000000ULL,
        0x0cd2eb983c800000ULL, 0x2afde18cb2c00000ULL, 0xa1f2706aad200000ULL, 0x10cd78413a300000ULL,
        0x286a1c8009980000ULL, 0x544102c0848c0000ULL, 0x068075200eea0000ULL, 0x3bc0d630df810000ULL,
        0xe9a03398b7208000ULL, 0x14f00d8c0330c000ULL, 0xe6b84a6a95182000ULL, 0xabbcf141464cb000ULL,
        0x01f2d8005bca5800ULL, 0x60cdec00b9b12c00ULL, 0x506a3a00dcb81a00ULL, 0xc841890022bc3900ULL,
        0xc480c48045721c80ULL, 0xeec0eec04e0d02c0ULL, 0x4f204f203f4a7520ULL, 0x5f305f302771d630ULL,
        0x77187718eb98b398ULL, 0x234c234ce18ccd8cULL, 0x254a254af06a6a6aULL, 0x1e711e71b8414141ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0x2000000000000000ULL, 0xb000000000000000ULL,
        0xd800000000000000ULL, 0xac00000000000000ULL, 0x8e00000000000000ULL, 0x0900000000000000ULL,
        0x9e80000000000000ULL, 0xa1c0000000000000ULL, 0xcaa0000000000000ULL, 0x3370000000000000ULL,
        0x9578000000000000ULL, 0x085c000000000000ULL, 0x24b6000000000000ULL, 0x6a35000000000000ULL,
        0x4378800000000000ULL, 0x6d5cc00000000000ULL, 0x1436200000000000ULL, 0x72f5b00000000000ULL,
        0xcf58580000000000ULL, 0x53ec6c0000000000ULL, 0xc5eeae0000000000ULL, 0x40d9b90000000000ULL,
        0xe016c68000000000ULL, 0x9045cdc000000000ULL, 0x6880e4a000000000ULL, 0x74c04a7000000000ULL,
        0x2220f3f800000000ULL, 0x87b0b59c00000000ULL, 0x9758b81600000000ULL, 0x3fecfc4500000000ULL,
        0x6beec68080000000ULL, 0xf9d9cdc0c0000000ULL, 0xa696e4a020000000ULL, 0x9d854a70b0000000ULL,
        0x2c2073f8d8000000ULL, 0x4eb0759cac000000ULL, 0x29d898168e000000ULL, 0x2e2c4c4509000000ULL,
        0x794e1e801e800000ULL, 0x66a961c061c00000ULL, 0xbdee6aa0eaa00000ULL, 0x9cd9437083700000ULL,
        0x9616ed784d780000ULL, 0x8545d45ca45c0000ULL, 0xa000d2b6aab60000ULL, 0x7000bf3563350000ULL,
        0xf800abf85df88000ULL, 0x1c00d99c0c9cc000ULL, 0x56001616fe962000ULL, 0xa5004545f185b000ULL,
        0x1080800002205800ULL, 0xa8c0c00037b06c00ULL, 0x542020004f58ae00ULL, 0x92b0b00093ecb900ULL,
        0x5fd8d800e5ee4680ULL, 0x3b2cac00f0d90dc0ULL, 0xb1ce8e003816c4a0ULL, 0x626909003c45fa70ULL,
        0x67ce1e80e680abf8ULL, 0x076961c07dc0d99cULL, 0x574e6aa0bca01616ULL, 0x1fa9437026704545ULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0xe000000000000000ULL, 0xf000000000000000ULL,
        0xa800000000000000ULL, 0x2c00000000000000ULL, 0xa200000000000000ULL, 0x2d00000000000000ULL,
        0xda80000000000000ULL, 0xf940000000000000ULL, 0xec60000000000000ULL, 0x02b0000000000000ULL,
        0x3d48000000000000ULL, 0x825c000000000000ULL, 0x7d4a000000000000ULL, 0x6261000000000000ULL,
        0x8dc8800000000000ULL, 0xca1c400000000000ULL, 0xa1aae00000000000ULL, 0x6891f00000000000ULL,
        0x8c60280000000000ULL, 0xb2b06c0000000000ULL, 0x7548420000000000ULL, 0x5e5cdd0000000000ULL,
        0x774a728000000000ULL, 0x6361d54000000000ULL, 0xf548ce6000000000ULL, 0x1e5c6fb000000000ULL,
        0x974a07c800000000ULL, 0x93618b1c00000000ULL, 0x5d48b92a00000000ULL, 0x325c0cd100000000ULL,
        0x354af28080000000ULL, 0xbe61954040000000ULL, 0x87c82e60e0000000ULL, 0xcb1c9fb0f0000000ULL,
        0xd92aafc8a8000000ULL, 0xbcd1a71c2c000000ULL, 0xba801b2aa2000000ULL, 0x494021d12d000000ULL,
        0xa46028005a800000ULL, 0xdeb06c00b9400000ULL, 0x374842000c600000ULL, 0x835cdd00f2b00000ULL,
        0x05ca728095480000ULL, 0xb621d540ae5c0000ULL, 0xbb28ce60df4a0000ULL, 0x31ec6fb04f610000ULL,
        0x708207c857488000ULL, 0xe87d8b1c335c4000ULL, 0xcc62b92a4dcae000ULL, 0x528d0cd16a21f000ULL,
        0x85ca728031282800ULL, 0xf621d54070ec6c00ULL, 0x5b28ce60e8024200ULL, 0xc1ec6fb0cc3ddd00ULL,
        0xd88207c85282f280ULL, 0xc47d8b1c857d9540ULL, 0x6e62b92af6e22e60ULL, 0x7f8d0cd15bcd9fb0ULL,
        0x5f4a728041aa2fc8ULL, 0x0f61d5409891e71cULL, 0xb748ce602460fb2aULL, 0xc35c6fb09eb0d1d1ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0xe000000000000000ULL, 0x3000000000000000ULL,
        0xc800000000000000ULL, 0x7c00000000000000ULL, 0x8200000000000000ULL, 0x4f00000000000000ULL,
        0xbe80000000000000ULL, 0xedc0000000000000ULL, 0x2160000000000000ULL, 0xab70000000000000ULL,
        0x7868000000000000ULL, 0x746c000000000000ULL, 0x1e9a000000000000ULL, 0xfdcb000000000000ULL,
        0x3908800000000000ULL, 0x2f1cc00000000000ULL, 0x4ef2e00000000000ULL, 0xc5a7300000000000ULL,
        0x6d92480000000000ULL, 0xe1d7bc0000000000ULL, 0x4b7ae20000000000ULL, 0x487bbf0000000000ULL,
        0xbc80168000000000ULL, 0x62c061c000000000ULL, 0x7fe08b6000000000ULL, 0x76b0a87000000000ULL,
        0x91088ce800000000ULL, 0xa31caaac00000000ULL, 0xe4f2037a00000000ULL, 0xc6a7f47b00000000ULL,
        0x99125e8080000000ULL, 0x3f17ddc0c0000000ULL, 0x569a6960e0000000ULL, 0x41cb177030000000ULL,
        0x5b089a68c8000000ULL, 0x501ccb6c7c000000ULL, 0x3872881a82000000ULL, 0x54675c0b4f000000ULL,
        0xcef2d2683e800000ULL, 0x05a7776c2dc00000ULL, 0x8d926a1ac1600000ULL, 0xd1d7e30b9b700000ULL,
        0x837a44e830680000ULL, 0x347bd6acc86c0000ULL, 0x3e80017a7c9a0000ULL, 0x2dc07b7b82cb0000ULL,
        0xc1608000cf888000ULL, 0x9b70c0007edcc000ULL, 0xb068e0000d92e000ULL, 0x086c300011d73000ULL,
        0x9c9ac800637a4800ULL, 0xb2cb7c00047bbc00ULL, 0x87880200f680e200ULL, 0xc2dc8f0051c0bf00ULL,
        0x6f925e8043609680ULL, 0x6ed7ddc0d470a1c0ULL, 0x15fa69600ee86b60ULL, 0x95bb1770e5ac9870ULL,
        0x55e09a68bdfa44e8ULL, 0xb5b0cb6c19bbd6acULL, 0x8588881affe0017aULL, 0x4ddc5c0bb6b07b7bULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0x2000000000000000ULL, 0x1000000000000000ULL,
        0x9800000000000000ULL, 0x2c00000000000000ULL, 0x0600000000000000ULL, 0xcd00000000000000ULL,
        0x8a80000000000000ULL, 0x1bc0000000000000ULL, 0xffa0000000000000ULL, 0xad50000000000000ULL,
        0x7af8000000000000ULL, 0xb3dc000000000000ULL, 0x5b2e000000000000ULL, 0x1f29000000000000ULL,
        0x9d58800000000000ULL, 0xf28cc00000000000ULL, 0x07d6200000000000ULL, 0x71f5100000000000ULL,
        0xd4f6180000000000ULL, 0xda65ec0000000000ULL, 0x632ea60000000000ULL, 0xe3291d0000000000ULL,
        0x2358b28000000000ULL, 0x038ce7c000000000ULL, 0x135641a000000000ULL, 0x8b355c5000000000ULL,
        0xa7d6ee7800000000ULL, 0xa1f5891c00000000ULL, 0x6cf6880e00000000ULL, 0xe665b4b900000000ULL,
        0xfd2eaa8080000000ULL, 0x02290bc0c0000000ULL, 0xafd8e7a020000000ULL, 0xd54c415010000000ULL,
        0x66765cf898000000ULL, 0x3da56edc2c000000ULL, 0x228ec9ae06000000ULL, 0xbf79e8e9cd000000ULL,
        0x4d20c4f80a800000ULL, 0x4a9042dcdbc00000ULL, 0x3b584faedfa00000ULL, 0xef8ce5e9bd500000ULL,
        0x3556ee7862f80000ULL, 0x5635891c5fdc0000ULL, 0xb556880e7d2e0000ULL, 0x9635b4b9c2290000ULL,
        0x9556aa800fd88000ULL, 0x86350bc0054cc000ULL, 0x0d56e7a0de762000ULL, 0xaa35415001a51000ULL,
        0x0b56dcf8bc8e1800ULL, 0x6735aedc5e79ec00ULL, 0x81d6e9aec1a0a600ULL, 0x7cf5f8e99c501d00ULL,
        0x7e765cf8ce783280ULL, 0xd1a56edc991c27c0ULL, 0x048ec9ae900e61a0ULL, 0x6279e8e958b94c50ULL,
        0x5fa0c4f88c807678ULL, 0x7d5042dcd6c0a51cULL, 0xc2f84fae75200e0eULL, 0x8fdce5e9b690b9b9ULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0xa000000000000000ULL, 0x9000000000000000ULL,
        0x9800000000000000ULL, 0x5400000000000000ULL, 0x3a00000000000000ULL, 0x9d00000000000000ULL,
        0x7e80000000000000ULL, 0x7f40000000000000ULL, 0x1720000000000000ULL, 0xab50000000000000ULL,
        0x6df8000000000000ULL, 0x96a4000000000000ULL, 0x83d2000000000000ULL, 0x71e1000000000000ULL,
        0xc0d8800000000000ULL, 0xe0f4400000000000ULL, 0x30aaa00000000000ULL, 0x0805900000000000ULL,
        0xcc2a180000000000ULL, 0x6e45140000000000ULL, 0xa78a1a0000000000ULL, 0xe3554d0000000000ULL,
        0x01d2c68000000000ULL, 0x68e1fb4000000000ULL, 0xbc58952000000000ULL, 0xc6b4b25000000000ULL,
        0xfb0a117800000000ULL, 0x1515b0e400000000ULL, 0xf272c87200000000ULL, 0xb1f12cf100000000ULL,
        0x2000de8080000000ULL, 0xd000ef4040000000ULL, 0x38008f20a0000000ULL, 0xc400ff5090000000ULL,
        0xa20057f898000000ULL, 0xc9000ba454000000ULL, 0x4480fd523a000000ULL, 0xe2400ea19d000000ULL,
        0x69a0d7f8fe800000ULL, 0xd4104ba43f400000ULL, 0x7ad85d52b7200000ULL, 0x3df49ea13b500000ULL,
        0xee2a4ff875f80000ULL, 0xe7451fa482a40000ULL, 0x430ae75219d20000ULL, 0x911543a17ce10000ULL,
        0xf0721178a6588000ULL, 0xe8f1b0e48bb44000ULL, 0xfc80c872bd8aa000ULL, 0x66402cf1ae559000ULL,
        0x6ba05e80c7521800ULL, 0x8d10af4093a11400ULL, 0xa6582f20a9781a00ULL, 0x8bb46f5034e44d00ULL,
        0xbd8acff84a724680ULL, 0xae555fa435f1bb40ULL, 0x4752475222003520ULL, 0xd3a1d3a189002250ULL,
        0x0978897864808978ULL, 0xa4e4e4e43240e4e4ULL, 0xd272727251a07272ULL, 0x61f1f1f11010f1f1ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0xe000000000000000ULL, 0xb000000000000000ULL,
        0x0800000000000000ULL, 0x8400000000000000ULL, 0xb200000000000000ULL, 0xb900000000000000ULL,
        0xbe80000000000000ULL, 0x4fc0000000000000ULL, 0x5560000000000000ULL, 0xf8f0000000000000ULL,
        0xac28000000000000ULL, 0x66d4000000000000ULL, 0xb30a000000000000ULL, 0x8bb5000000000000ULL,
        0xc7c8800000000000ULL, 0x11e4c00000000000ULL, 0xaa42e00000000000ULL, 0xa591b00000000000ULL,
        0xd0ea880000000000ULL, 0x7885440000000000ULL, 0x6c80d20000000000ULL, 0x86c0c90000000000ULL,
        0x03e0568000000000ULL, 0x83307bc000000000ULL, 0x4348ef6000000000ULL, 0xa324c5f000000000ULL,
        0x13a2a0a800000000ULL, 0x1ba1901400000000ULL, 0x9f22d8ea00000000ULL, 0x2d61fc8500000000ULL,
        0x94c25e8080000000ULL, 0x2a51ffc0c0000000ULL, 0x658add60e0000000ULL, 0x3075bcf0b0000000ULL,
        0xc8a87e2808000000ULL, 0x6414afd484000000ULL, 0x02eae58ab2000000ULL, 0xb185f075b9000000ULL,
        0x3a00a8a83e800000ULL, 0xfd0014148fc00000ULL, 0xec80eaeab5600000ULL, 0x46c0858548f00000ULL,
        0xe3e0800024280000ULL, 0x3330c00022d40000ULL, 0x4b48e000e10a0000ULL, 0x2724b00082b50000ULL,
        0xa1a2080071488000ULL, 0xa2a18400da24c000ULL, 0x21a232004d22e000ULL, 0x62a17900e461b000ULL,
        0xc1a2de80c2428800ULL, 0xd2a13fc051914400ULL, 0xc9a23d608aead200ULL, 0x56a10cf0f585c900ULL,
        0x7ba276286800d680ULL, 0xefa12bd4f400bbc0ULL, 0xc522d78a5a000f60ULL, 0xa06189758d0075f0ULL,
        0x9042f6288480a8a8ULL, 0x5891ebd4b2c01414ULL, 0x3c6a378ab9e0eaeaULL, 0x3e453975be308585ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0x6000000000000000ULL, 0x3000000000000000ULL,
        0x7800000000000000ULL, 0x2400000000000000ULL, 0x9e00000000000000ULL, 0x4700000000000000ULL,
        0x6780000000000000ULL, 0xf740000000000000ULL, 0xdf20000000000000ULL, 0xb310000000000000ULL,
        0x7168000000000000ULL, 0x8c4c000000000000ULL, 0x3252000000000000ULL, 0xe5d5000000000000ULL,
        0xaa52800000000000ULL, 0x31d5c00000000000ULL, 0x2c52e00000000000ULL, 0x62d5f00000000000ULL,
        0xadd2980000000000ULL, 0xf695d40000000000ULL, 0x8b72060000000000ULL, 0xf5c5930000000000ULL,
        0x42ba618000000000ULL, 0x3dd9644000000000ULL, 0xdea0bea000000000ULL, 0xe750d75000000000ULL,
        0x37c84fc800000000ULL, 0xbf1c9b1c00000000ULL, 0x839a1d9a00000000ULL, 0x09c94ec900000000ULL,
        0xa8484fc880000000ULL, 0xac5c9b1cc0000000ULL, 0xa2ba1d9a60000000ULL, 0xcdd94ec930000000ULL,
        0xc6a04fc8f8000000ULL, 0xf3509b1ce4000000ULL, 0xd1c81d9afe000000ULL, 0xdc1c4ec977000000ULL,
        0x7a1acfc89f800000ULL, 0xb9895b1c13400000ULL, 0x10e8fd9a21200000ULL, 0xe80cbec9c4100000ULL,
        0x0cf2d7c8eee80000ULL, 0xf2854f1c9f0c0000ULL, 0x859a1b9a13720000ULL, 0x9ac9ddc921c50000ULL,
        0x49c8ae4844ba8000ULL, 0x081c3f5caed9c000ULL, 0xfc1a433a3f20e000ULL, 0xea8969994310f000ULL,
        0x91681800e9681800ULL, 0x7c4c1400584c1400ULL, 0x2a52e600b452e600ULL, 0xf1d56300b6d56300ULL,
        0x4c5279802bd27980ULL, 0x52d57040a5957040ULL, 0xd5d258a00af258a0ULL, 0xd295b4506185b450ULL,
        0x15723648641a3648ULL, 0xb2c5eb5c3e89eb5cULL, 0x253a453a1768453aULL, 0xca99fa992f4cfa99ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0xe000000000000000ULL, 0xb000000000000000ULL,
        0x7800000000000000ULL, 0x9c00000000000000ULL, 0xee00000000000000ULL, 0x1b00000000000000ULL,
        0xcb80000000000000ULL, 0xc340000000000000ULL, 0xc7a0000000000000ULL, 0x0510000000000000ULL,
        0x8868000000000000ULL, 0xc474000000000000ULL, 0x225a000000000000ULL, 0x3da1000000000000ULL,
        0x345a800000000000ULL, 0x7aa1c00000000000ULL, 0xf1da600000000000ULL, 0x12e1700000000000ULL,
        0x85fa180000000000ULL, 0x48b1ec0000000000ULL, 0x2432f60000000000ULL, 0x92d5f70000000000ULL,
        0x45803d8000000000ULL, 0xa840344000000000ULL, 0x94207a2000000000ULL, 0xea50f15000000000ULL,
        0xd9c8124800000000ULL, 0x4664852400000000ULL, 0x8fb2481200000000ULL, 0x2195248500000000ULL,
        0x1a20124880000000ULL, 0x81508524c0000000ULL, 0x8a484812e0000000ULL, 0xa9242485b0000000ULL,
        0xde129248f8000000ULL, 0xa38545245c000000ULL, 0xb7c828120e000000ULL, 0x9d645485ab000000ULL,
        0xa4320a4833800000ULL, 0x52d569249f400000ULL, 0xa580be12c9a00000ULL, 0x1840d385ae100000ULL,
        0xec202fc8bbe80000ULL, 0x7650b1645b340000ULL, 0x37c83232ebfa0000ULL, 0x5d64d5d593b10000ULL,
        0x443280008fb28000ULL, 0xe2d5c0002195c000ULL, 0xdd8060001a206000ULL, 0x8440700081507000ULL,
        0x022098008a489800ULL, 0x6d502c00a9242c00ULL, 0xfc489600de129600ULL, 0x9e248700a3858700ULL,
        0x83922580b7c8a580ULL, 0xe7c5d8409d641840ULL, 0x55e88c20a432ec20ULL, 0x4034065052d57650ULL,
        0x207aafc8a580b7c8ULL, 0x50f1716418409d64ULL, 0xc8125232ec20a432ULL, 0xe485a5d5765052d5ULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0x6000000000000000ULL, 0x1000000000000000ULL,
        0x5800000000000000ULL, 0x7c00000000000000ULL, 0xc200000000000000ULL, 0xe100000000000000ULL,
        0x0d80000000000000ULL, 0xd7c0000000000000ULL, 0x2aa0000000000000ULL, 0xf530000000000000ULL,
        0x9ba8000000000000ULL, 0xc0f4000000000000ULL, 0x20c6000000000000ULL, 0x702f000000000000ULL,
        0x4866800000000000ULL, 0x241f400000000000ULL, 0xbe4ee00000000000ULL, 0x232b500000000000ULL,
        0xec28b80000000000ULL, 0xda342c0000000000ULL, 0xfde6fa0000000000ULL, 0xdfdf8d0000000000ULL,
        0x6eee178000000000ULL, 0x5b1b0ac000000000ULL, 0xe000052000000000ULL, 0x500093f000000000ULL,
        0x3800848800000000ULL, 0x6c008e0400000000ULL, 0x9a000bce00000000ULL, 0x9d00d8eb00000000ULL,
        0xcf803c8880000000ULL, 0x36c0a20440000000ULL, 0x2720f1ce60000000ULL, 0x22f055eb10000000ULL,
        0xb108ab08d8000000ULL, 0x35c4e8c43c000000ULL, 0xbb6e14eea2000000ULL, 0xb0db961bf1000000ULL,
        0x68a09780d5800000ULL, 0x54304ac0ebc00000ULL, 0xf628e52088a00000ULL, 0x0734c3f004300000ULL,
        0x5266bc88ce280000ULL, 0xf91fe2046b340000ULL, 0x11ce11cec8660000ULL, 0x05eb05eb641f0000ULL,
        0x930813085e4e8000ULL, 0x84c4c4c4732b4000ULL, 0x8eeeeeeed428e000ULL, 0x0b1b1b1bb6345000ULL,
        0xd8000000e7e63800ULL, 0x3c00000002df6c00ULL, 0xa2000000c16e1a00ULL, 0xf10000007ddbdd00ULL,
        0x558000009f202f80ULL, 0xabc000000ef066c0ULL, 0xe8a000004b081f20ULL, 0x14300000b8c44ef0ULL,
        0x962800002cee2b08ULL, 0x17340000fa1ba8c4ULL, 0x0a6600008d80f4eeULL, 0x851f000097c0c61bULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0x2000000000000000ULL, 0x3000000000000000ULL,
        0xb800000000000000ULL, 0xac00000000000000ULL, 0x7200000000000000ULL, 0xb100000000000000ULL,
        0x0380000000000000ULL, 0xd2c0000000000000ULL, 0xc160000000000000ULL, 0x9b90000000000000ULL,
        0x4e48000000000000ULL, 0x0b74000000000000ULL, 0x864e000000000000ULL, 0x3f0b000000000000ULL,
        0x6806800000000000ULL, 0x447f400000000000ULL, 0x7648a00000000000ULL, 0xe774700000000000ULL,
        0xd44e980000000000ULL, 0xbe0b9c0000000000ULL, 0xd3864a0000000000ULL, 0x3abf5d0000000000ULL,
        0xc528d18000000000ULL, 0xcde413c000000000ULL, 0x99865ae000000000ULL, 0x67bfd55000000000ULL,
        0x94a8c52800000000ULL, 0x9e24cde400000000ULL, 0xe366998600000000ULL, 0x82ef67bf00000000ULL,
        0x698014a880000000ULL, 0xbfc0de2440000000ULL, 0x28e0c36620000000ULL, 0x6450b2ef30000000ULL,
        0x46a8d18038000000ULL, 0x5f2413c0ec000000ULL, 0x78e65ae052000000ULL, 0xcc2fd55081000000ULL,
        0x62e0c528bb800000ULL, 0x3950cde47ec00000ULL, 0x17289986b3600000ULL, 0x0ce467bf2a900000ULL,
        0x020694a8cdc80000ULL, 0x297f9e2499b40000ULL, 0x9fc86366672e0000ULL, 0x18b4c2ef949b0000ULL,
        0xdcae49801e4e8000ULL, 0xea5b8fc0a30b4000ULL, 0x2d2e10e0a206a000ULL, 0xc99b8850597f7000ULL,
        0xcfce94a807c81800ULL, 0xb0cb9e2484b4dc00ULL, 0xf8e6636616aeea00ULL, 0x8c2fc2eff75b2d00ULL,
        0x42e0c980dcae4980ULL, 0x0950cfc0ea5b8fc0ULL, 0xaf28b0e02d2e10e0ULL, 0xa0e4f850c99b8850ULL,
        0x70068ca8cfce94a8ULL, 0x987f4224b0cb9e24ULL, 0x9c488966f8e66366ULL, 0xca74efef8c2fc2efULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0xe000000000000000ULL, 0x7000000000000000ULL,
        0x8800000000000000ULL, 0x4400000000000000ULL, 0x4a00000000000000ULL, 0x4700000000000000ULL,
        0xdd80000000000000ULL, 0x4240000000000000ULL, 0xc320000000000000ULL, 0x7710000000000000ULL,
        0x75b8000000000000ULL, 0x966c000000000000ULL, 0x715e000000000000ULL, 0xfc95000000000000ULL,
        0xa6e6800000000000ULL, 0xd9f9c00000000000ULL, 0x2838600000000000ULL, 0x142cb00000000000ULL,
        0x527e680000000000ULL, 0xfb85340000000000ULL, 0x5b5e420000000000ULL, 0x0b95c30000000000ULL,
        0x1366f78000000000ULL, 0xafb9b54000000000ULL, 0x2918f6a000000000ULL, 0x603cc15000000000ULL,
        0xb046949800000000ULL, 0x68a9927c00000000ULL, 0x34a09b6600000000ULL, 0xc250ebb900000000ULL,
        0x0318631880000000ULL, 0x973c273cc0000000ULL, 0x05c66dc6e0000000ULL, 0x1ee92ae970000000ULL,
        0x3580778008000000ULL, 0xb640754084000000ULL, 0xe12096a0aa000000ULL, 0x0410715037000000ULL,
        0x6a38fc9855800000ULL, 0xd72ca67c06400000ULL, 0x25fed96689200000ULL, 0x8ec528b930100000ULL,
        0xcdfe949828380000ULL, 0x7ac5927c142c0000ULL, 0xeffe9b66527e0000ULL, 0x09c5ebb9fb850000ULL,
        0xf07ee318db5e8000ULL, 0x4885e73ccb95c000ULL, 0xa4de0dc6f3666000ULL, 0x3ad59ae9dfb9b000ULL,
        0xcfc61f802118e800ULL, 0x99e94140e43cf400ULL, 0x0800d4a01a462200ULL, 0x8400b2505fa97300ULL,
        0xaa008b1861209f80ULL, 0x3700d33cc4108140ULL, 0x55804fc68a38b4a0ULL, 0x064059e9a72c0250ULL,
        0x8920e8002dfee318ULL, 0x3010f4000ac5e73cULL, 0xa838220067fe0dc6ULL, 0xd42c73004dc59ae9ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0x2000000000000000ULL, 0x5000000000000000ULL,
        0xd800000000000000ULL, 0xfc00000000000000ULL, 0xf600000000000000ULL, 0xd500000000000000ULL,
        0xbf80000000000000ULL, 0x2c40000000000000ULL, 0xeee0000000000000ULL, 0x0970000000000000ULL,
        0x1908000000000000ULL, 0x2164000000000000ULL, 0xad6a000000000000ULL, 0xd313000000000000ULL,
        0x2282800000000000ULL, 0x9707c00000000000ULL, 0x98e0a00000000000ULL, 0x1c70900000000000ULL,
        0x8688f80000000000ULL, 0x5d24ac0000000000ULL, 0x9b8a2e0000000000ULL, 0x2663290000000000ULL,
        0xcd8ac98000000000ULL, 0x6363394000000000ULL, 0x8a0af16000000000ULL, 0xe323b53000000000ULL,
        0x4aea8fe800000000ULL, 0xc353441400000000ULL, 0x1a623a6200000000ULL, 0x1b774b7700000000ULL,
        0xe668be6880000000ULL, 0xed54d154c0000000ULL, 0x3302e50220000000ULL, 0x5247d74750000000ULL,
        0x1f80f80058000000ULL, 0xbc40ac003c000000ULL, 0x16e02e00d6000000ULL, 0xa570290085000000ULL,
        0x3708498067800000ULL, 0x0864f940d0400000ULL, 0xe4ea516018e00000ULL, 0x2a532530dc700000ULL,
        0x73e277e8a6880000ULL, 0xb237e8140d240000ULL, 0x6f081462438a0000ULL, 0x34646277da630000ULL,
        0x32ea77e8bb8a8000ULL, 0xaf53e8147663c000ULL, 0x14621462158aa000ULL, 0x627762779f639000ULL,
        0x77e8f7e8fc0a7800ULL, 0xe8142814f6236c00ULL, 0x9462b462d56a8e00ULL, 0xa277f277bf13b900ULL,
        0x57e80fe8ac823180ULL, 0xb81484142e079540ULL, 0x4c629a622960df60ULL, 0x5e77db7749309c30ULL,
        0xa1e8466879e84668ULL, 0x6d147d5491147d54ULL, 0xf3e2cb0205e2cb02ULL, 0x7237fe47a737fe47ULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0x6000000000000000ULL, 0x5000000000000000ULL,
        0x5800000000000000ULL, 0xac00000000000000ULL, 0x6a00000000000000ULL, 0x8500000000000000ULL,
        0xfb80000000000000ULL, 0xa8c0000000000000ULL, 0x8420000000000000ULL, 0xae30000000000000ULL,
        0x4b08000000000000ULL, 0xe074000000000000ULL, 0x1086000000000000ULL, 0x388f000000000000ULL,
        0xfc2e800000000000ULL, 0x320b400000000000ULL, 0x2980e00000000000ULL, 0x91c0100000000000ULL,
        0x2da0380000000000ULL, 0x7ff0fc0000000000ULL, 0x06a8320000000000ULL, 0xcf84290000000000ULL,
        0x4e2e918000000000ULL, 0x5b0b2dc000000000ULL, 0xd800ffa000000000ULL, 0xec0046f000000000ULL,
        0x0a00af2800000000ULL, 0xd5001e4400000000ULL, 0xa380038e00000000ULL, 0x04c074fb00000000ULL,
        0xee2086a880000000ULL, 0x2b308f8440000000ULL, 0xb0882e2e60000000ULL, 0x48b40b0b50000000ULL,
        0x94a68000d8000000ULL, 0x96bf4000ec000000ULL, 0xb726e0000a000000ULL, 0xd27f1000d5000000ULL,
        0x3906b800a3800000ULL, 0xa94fbc0004c00000ULL, 0xd18ed200ee200000ULL, 0x4dfb39002b300000ULL,
        0x2f282980b0880000ULL, 0x5e4491c048b40000ULL, 0x638e2da094a60000ULL, 0x24fb7ff096bf0000ULL,
        0xdea886a8b7268000ULL, 0x23848f84d27f4000ULL, 0x442e2e2e3906e000ULL, 0x8e0b0b0ba94f1000ULL,
        0x7b800000518eb800ULL, 0xe8c000000dfbbc00ULL, 0xe42000004f28d200ULL, 0xfe3000000e443900ULL,
        0x130800003b8ea980ULL, 0x4c74000088fbd1c0ULL, 0x7a860000b4a8cda0ULL, 0xbd8f0000a6846ff0ULL,
        0x07ae8000bfae3ea8ULL, 0x9acb400026cb3384ULL, 0xada0e000ffa0fc2eULL, 0x3ff0100046f0320bULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0xa000000000000000ULL, 0x5000000000000000ULL,
        0xe800000000000000ULL, 0x4400000000000000ULL, 0x5e00000000000000ULL, 0xad00000000000000ULL,
        0xef80000000000000ULL, 0x6840000000000000ULL, 0x8460000000000000ULL, 0xfe50000000000000ULL,
        0xfd28000000000000ULL, 0x07f4000000000000ULL, 0x2c62000000000000ULL, 0xda4f000000000000ULL,
        0x5306800000000000ULL, 0x12dfc00000000000ULL, 0x6f80200000000000ULL, 0xa840300000000000ULL,
        0x2460280000000000ULL, 0xae50140000000000ULL, 0x15283a0000000000ULL, 0x43f4110000000000ULL,
        0x7262178000000000ULL, 0x774f2b4000000000ULL, 0xbc86bbe000000000ULL, 0x7a9fda1000000000ULL,
        0xebe0011800000000ULL, 0x56100f9400000000ULL, 0xd948174a00000000ULL, 0xa9a415fd00000000ULL,
        0x394a311880000000ULL, 0x99bb2793c0000000ULL, 0x21648341a0000000ULL, 0x6590eff7f0000000ULL,
        0xd306800008000000ULL, 0xd2dfc0000c000000ULL, 0xcf8020000a000000ULL, 0xf840300005000000ULL,
        0xcc6028000e800000ULL, 0xea50140004400000ULL, 0x4b283a0005e00000ULL, 0xeef411000ad00000ULL,
        0x9de217800ef80000ULL, 0x1f0f2b4006840000ULL, 0x38e6bbe008460000ULL, 0x84cfda100fe50000ULL,
        0x16c801180fd28000ULL, 0x51e40f94007f4000ULL, 0xf52a174a02c62000ULL, 0x73eb15fd0da4f000ULL,
        0x6a4cb11885306800ULL, 0x8b64e793c12dfc00ULL, 0x4ee4a341a6f80200ULL, 0xcdd0dff7fa840300ULL,
        0xf766a8000a460280ULL, 0x7c8fd40006e50140ULL, 0xdaa81a000b5283a0ULL, 0xbbb42100013f4110ULL,
        0xbe023f8009a62178ULL, 0x9d1f3f400334f2b4ULL, 0xf7ae81e00e286bbeULL, 0x946bcb100d79fda1ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0x6000000000000000ULL, 0xb000000000000000ULL,
        0x1800000000000000ULL, 0x0400000000000000ULL, 0xda00000000000000ULL, 0x0900000000000000ULL,
        0x2280000000000000ULL, 0xe840000000000000ULL, 0xbc60000000000000ULL, 0x0e30000000000000ULL,
        0x7b58000000000000ULL, 0x378c000000000000ULL, 0x14c2000000000000ULL, 0x874d000000000000ULL,
        0x99d4800000000000ULL, 0xbfb9400000000000ULL, 0x1880200000000000ULL, 0x9140300000000000ULL,
        0xe6e0180000000000ULL, 0x52702c0000000000ULL, 0x0538060000000000ULL, 0x34bc010000000000ULL,
        0x971a368000000000ULL, 0x5181024000000000ULL, 0x13f688a000000000ULL, 0xde847a1000000000ULL,
        0x466c8f1800000000ULL, 0x1745738c00000000ULL, 0x91fa26d600000000ULL, 0x73f111e300000000ULL,
        0x6ece9b3080000000ULL, 0x5e384cd340000000ULL, 0x1376b6f520000000ULL, 0x4bc45cae50000000ULL,
        0x7a8c800008000000ULL, 0x4c3540000c000000ULL, 0xb642200006000000ULL, 0xaf0d30000b000000ULL,
        0x45b4980001800000ULL, 0x01896c0000400000ULL, 0x7bd826000da00000ULL, 0xa2cc310000900000ULL,
        0x28222e8002280000ULL, 0xdc3d2e400e840000ULL, 0xbe6c8ea00bc60000ULL, 0x63457b1000e30000ULL,
        0x33fa399807b58000ULL, 0xcef131cc0378c000ULL, 0x8e4e8e76014c2000ULL, 0xbb785bf30874d000ULL,
        0x57968c28899d4800ULL, 0xa4b4535f4bfb9400ULL, 0x9f34b62321880200ULL, 0x9dc97c4d59140300ULL,
        0x65b835b0866e0180ULL, 0x11fc2293492702c0ULL, 0xb3fa185526538060ULL, 0x0ef117be584bc010ULL,
        0xee4ea19800f1a368ULL, 0x0b785dcc09581024ULL, 0x4f96a8760a9f688aULL, 0xa0b46af3067847a1ULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0x2000000000000000ULL, 0x5000000000000000ULL,
        0x8800000000000000ULL, 0x9c00000000000000ULL, 0x2e00000000000000ULL, 0x0500000000000000ULL,
        0xab80000000000000ULL, 0x1c40000000000000ULL, 0x6e20000000000000ULL, 0x2510000000000000ULL,
        0xfba8000000000000ULL, 0x9404000000000000ULL, 0xf26e000000000000ULL, 0x0b07000000000000ULL,
        0xfeaa800000000000ULL, 0x3fd1c00000000000ULL, 0xee20200000000000ULL, 0x6510100000000000ULL,
        0xdba8080000000000ULL, 0xc404140000000000ULL, 0x7a6e220000000000ULL, 0x9707270000000000ULL,
        0xd0aa8b8000000000ULL, 0x3ad1c14000000000ULL, 0x45a00ae000000000ULL, 0x7950171000000000ULL,
        0xb588138800000000ULL, 0xe1141d4400000000ULL, 0x81c61cea00000000ULL, 0x0303020100000000ULL,
        0x22c4b71b80000000ULL, 0x31d6c381c0000000ULL, 0xbb0ab54aa0000000ULL, 0x4681d8e470000000ULL,
        0x5ba8080008000000ULL, 0x8404140004000000ULL, 0x5a6e220002000000ULL, 0xc707270005000000ULL,
        0x58aa8b8008800000ULL, 0xa6d1c14009c00000ULL, 0x6ba00ae002e00000ULL, 0x7c50171000500000ULL,
        0x1e0813880ab80000ULL, 0xfd541d4401c40000ULL, 0xefe61cea06e20000ULL, 0x2613020102510000ULL,
        0xd96cb71b8fba8000ULL, 0xa5d2c381c9404000ULL, 0x4964b54aaf26e000ULL, 0x4d86d8e470b07000ULL,
        0xa502880007eaa800ULL, 0xbbd5d40007fd1c00ULL, 0xb44e02000ce20200ULL, 0xa217370003510100ULL,
        0x83028380053a8080ULL, 0x62d5d54005804140ULL, 0x11ce28e00546e220ULL, 0xeb57301009207270ULL,
        0xcea2980807b2a8b8ULL, 0xc785dc0402691c14ULL, 0xaa46160a02b800aeULL, 0x5f43151105c40171ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0x2000000000000000ULL, 0x5000000000000000ULL,
        0xc800000000000000ULL, 0x3c00000000000000ULL, 0x3e00000000000000ULL, 0x6700000000000000ULL,
        0xf980000000000000ULL, 0xcc40000000000000ULL, 0x6660000000000000ULL, 0xb310000000000000ULL,
        0xaba8000000000000ULL, 0x5d24000000000000ULL, 0xc4fe000000000000ULL, 0xb8cf000000000000ULL,
        0x66bb800000000000ULL, 0x71a8c00000000000ULL, 0x1060200000000000ULL, 0x2810300000000000ULL,
        0x4c28080000000000ULL, 0xa664140000000000ULL, 0x931e320000000000ULL, 0xfb9f0f0000000000ULL,
        0x95738f8000000000ULL, 0xf89cd9c000000000ULL, 0x86b61e6000000000ULL, 0x01bb031000000000ULL,
        0x880d919800000000ULL, 0xdc13f8c400000000ULL, 0x4e6db8ea00000000ULL, 0xff03e84900000000ULL,
        0x0dc596bf80000000ULL, 0xce27d3f3c0000000ULL, 0x3f3bbdcee0000000ULL, 0x2de8c47a30000000ULL,
        0x9e00080008000000ULL, 0xf70014000c000000ULL, 0x1180320002000000ULL, 0xa0400f0005000000ULL,
        0x90600f800c800000ULL, 0xe81019c003c00000ULL, 0x6c283e6003e00000ULL, 0xf664331006700000ULL,
        0x5b1e19980f980000ULL, 0xc79f2cc40cc40000ULL, 0xab73aaea06660000ULL, 0x9f9cd7490b310000ULL,
        0x7f36113f8aba8000ULL, 0xcdfb1e33c5d24000ULL, 0xee6d91aeec4fe000ULL, 0x6f03c86a3b8cf000ULL,
        0xe5c596180e6bb800ULL, 0xa227f5040b1a8c00ULL, 0xc93bb48a03060200ULL, 0x76e8d45907810300ULL,
        0x598000a788428080ULL, 0x5c4026f7c9a64140ULL, 0x8e600944ead1e320ULL, 0xdf10102339c9f0f0ULL,
        0x5da808a78ecf38f8ULL, 0x062432f7cf4dcd9cULL, 0x037e3b44ec0d61e6ULL, 0x138f1f233e2ab031ULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0x2000000000000000ULL, 0xb000000000000000ULL,
        0x5800000000000000ULL, 0x4400000000000000ULL, 0x7e00000000000000ULL, 0x6900000000000000ULL,
        0x5b80000000000000ULL, 0xdc40000000000000ULL, 0x5a20000000000000ULL, 0x8710000000000000ULL,
        0xdad8000000000000ULL, 0x9bec000000000000ULL, 0xbc42000000000000ULL, 0xca0f000000000000ULL,
        0x6f7c800000000000ULL, 0xc6d9c00000000000ULL, 0xa1a0200000000000ULL, 0xab50100000000000ULL,
        0xf8f8080000000000ULL, 0xe8fc2c0000000000ULL, 0x409a160000000000ULL, 0x7ce3110000000000ULL,
        0xf6be9f8000000000ULL, 0xb996da4000000000ULL, 0xcf7cb6e000000000ULL, 0x36d9e71000000000ULL,
        0xd9a03e8800000000ULL, 0x5f501dc400000000ULL, 0xdef828b600000000ULL, 0xc5fc1bfb00000000ULL,
        0x651a269080000000ULL, 0xc9a339c3c0000000ULL, 0xf71e92bf20000000ULL, 0xe2c6dce670000000ULL,
        0x4f84880008000000ULL, 0x2a25ec0004000000ULL, 0xbf3a360002000000ULL, 0x0eb301000b000000ULL,
        0x0dc6978005800000ULL, 0xc92af64004400000ULL, 0xabc6a0e007e00000ULL, 0xa42af61006900000ULL,
        0xae46a10805b80000ULL, 0xa16ac7840dc40000ULL, 0xf7e69e5605a20000ULL, 0xbe3afceb08710000ULL,
        0x091e98188dad8000ULL, 0xcbc6e407c9bec000ULL, 0x34049a092bc42000ULL, 0x4665d71d7ca0f000ULL,
        0xbd1a26908ef7c800ULL, 0xcda339c3c86d9c00ULL, 0xa91e92bf281a0200ULL, 0x3bc6dce671b50100ULL,
        0x4c048800020f8080ULL, 0xb265ec000ecfc2c0ULL, 0x9b1a360001e9a160ULL, 0xe0a301000a5e3110ULL,
        0x8c9e97800f53e9f8ULL, 0x8e86f640021d6da4ULL, 0x4da4a0e00eb5cb6eULL, 0xe935f6100d8c9e71ULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0xa000000000000000ULL, 0xb000000000000000ULL,
        0x4800000000000000ULL, 0x7400000000000000ULL, 0xc200000000000000ULL, 0xe700000000000000ULL,
        0xb580000000000000ULL, 0xba40000000000000ULL, 0x9b20000000000000ULL, 0xa3d0000000000000ULL,
        0x2f18000000000000ULL, 0x8184000000000000ULL, 0xd82a000000000000ULL, 0xcc19000000000000ULL,
        0x5e07800000000000ULL, 0xe138c00000000000ULL, 0xd898200000000000ULL, 0x9cc4100000000000ULL,
        0x568a280000000000ULL, 0x65892c0000000000ULL, 0xa23f920000000000ULL, 0xb76cdd0000000000ULL,
        0xedaa108000000000ULL, 0x365929c000000000ULL, 0x6527856000000000ULL, 0xf2e8c29000000000ULL,
        0xbf8014c800000000ULL, 0x694025f400000000ULL, 0x4ca0134600000000ULL, 0x4e9035a100000000ULL,
        0x49b8096a80000000ULL, 0xec14009640000000ULL, 0xae1201c9e0000000ULL, 0x094d297a30000000ULL,
        0x1cb5908008000000ULL, 0x16e5e9c004000000ULL, 0xc595a5600a000000ULL, 0x1235d2900b000000ULL,
        0xff0dbcc804800000ULL, 0x99f1c9f407400000ULL, 0xf407a1460c200000ULL, 0x8238f8a10e700000ULL,
        0x471831ea8b580000ULL, 0x058405564ba40000ULL, 0xf22a16a9e9b20000ULL, 0xef1936ea3a3d0000ULL,
        0x618794c80af18000ULL, 0xc878e5f40c184000ULL, 0x343833460782a000ULL, 0x625425a107c19000ULL,
        0x5732216a81607800ULL, 0xfd9d2c9649538c00ULL, 0xce2d93c9e1a98200ULL, 0x5921f47a37bc4100ULL,
        0x449f80000630a280ULL, 0x9afcc00009fc92c0ULL, 0x3b9220000991f920ULL, 0x430d10000a4bcdd0ULL,
        0x6f95a80008ab2108ULL, 0x7135ec000c3dd29cULL, 0x608db20007f0d856ULL, 0x00b1cd000d9f1c29ULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0xa000000000000000ULL, 0xf000000000000000ULL,
        0x9800000000000000ULL, 0xb400000000000000ULL, 0x5200000000000000ULL, 0x0700000000000000ULL,
        0xbf80000000000000ULL, 0x5a40000000000000ULL, 0x3b20000000000000ULL, 0x91d0000000000000ULL,
        0xd338000000000000ULL, 0xfdec000000000000ULL, 0x954a000000000000ULL, 0x58f1000000000000ULL,
        0xb5df800000000000ULL, 0x091dc00000000000ULL, 0x86b8200000000000ULL, 0xa4ac100000000000ULL,
        0x7bea280000000000ULL, 0xd0613c0000000000ULL, 0x2847a60000000000ULL, 0x8c61ed0000000000ULL,
        0x166a348000000000ULL, 0xcd2111c000000000ULL, 0x0ce787e000000000ULL, 0xb7f1ea9000000000ULL,
        0x667208c800000000ULL, 0x151d197400000000ULL, 0x1895884e00000000ULL, 0x15ecc2bb00000000ULL,
        0xf9678cb280000000ULL, 0x1eb1fdac40000000ULL, 0x10d23f3fe0000000ULL, 0x298d0bf370000000ULL,
        0xd70db48008000000ULL, 0x9790d1c004000000ULL, 0xd635a7e00a000000ULL, 0x2d7cfa900f000000ULL,
        0x5cffa0c809800000ULL, 0xdfcde5740b400000ULL, 0x4a000e4e05200000ULL, 0xf3003fbb00700000ULL,
        0x4d8010328bf80000ULL, 0xad40106c45a40000ULL, 0x1ca03edfe3b20000ULL, 0x7f901c63791d0000ULL,
        0xba1820c805338000ULL, 0x6b3c25740bdec000ULL, 0xf9f22e4e0354a000ULL, 0xff5d2fbb0a8f1000ULL,
        0x1bb5b83282ddf800ULL, 0xc03cec6c4bd1dc00ULL, 0xe05fb8dfed4b8200ULL, 0x505de1637a3ac100ULL,
        0x68183c480446a280ULL, 0x2c3c08b40ca213c0ULL, 0xe6720fae0b367a60ULL, 0x551d282b0edb1ed0ULL,
        0xb895847a85d52348ULL, 0xe5ece4d8484cd11cULL, 0x6167b771ecbad87eULL, 0xaab1c9487e800ea9ULL,
    },
    {
        0x8000000000000000ULL, 0xc000000000000000ULL, 0xe000000000000000ULL, 0x7000000000000000ULL,
        0xf800000000000000ULL, 0x4c00000000000000ULL, 0xa600000000000000ULL, 0x8900000000000000ULL,
        0x6e80000000000000ULL, 0x1a40000000000000ULL, 0x1760000000000000ULL, 0x4bf0000000000000ULL,
        0xa2f8000000000000ULL, 0x7c5c000000000000ULL, 0x7e36000000000000ULL, 0x551b000000000000ULL,
        0x4080800000000000ULL, 0x272d400000000000ULL, 0x9398200000000000ULL, 0x7eac300000000000ULL,
        0x524e380000000000ULL, 0x43071c0000000000ULL, 0xd1d6be0000000000ULL, 0x75c6530000000000ULL,
        0xd7e0898000000000ULL, 0xacdd524000000000ULL, 0xd16003a000000000ULL, 0x72f02a9000000000ULL,
        0xd47803d800000000ULL, 0x5a1c1dfc00000000ULL, 0x37563f3e00000000ULL, 0xdbeb2e5700000000ULL,
        0x2af8adad80000000ULL, 0xc8317196c0000000ULL, 0x944e2e5820000000ULL, 0x7a072da750000000ULL,
        0xa756b18008000000ULL, 0x53864e400c000000ULL, 0x9e80bda00e000000ULL, 0x222d799007000000ULL,
        0xbb180a580f800000ULL, 0x9dec0fbc04c00000ULL, 0xd3ae1c9e0a600000ULL, 0x5eb734c708900000ULL,
        0xc24e967586e80000ULL, 0xcb6a706ac1a40000ULL, 0x65aeaf6621760000ULL, 0x9fda50f054bf0000ULL,
        0xf8b695ad822f8000ULL, 0x4b366d96cbc5c000ULL, 0xa598905829e36000ULL, 0x7fc17ea75251b000ULL,
        0x88b6380003880800ULL, 0xb35b1c000ab2d400ULL, 0xe9e0be000d598200ULL, 0xd9dd5300087ac300ULL,
        0x01e009800c4ce380ULL, 0xddb01240015471c0ULL, 0xf39823a0060b6be0ULL, 0xceac1a900b736530ULL,
        0x4a4e3bd801b98898ULL, 0x7f0701fc0cac1524ULL, 0x8fd6813e0b83603aULL, 0xb0c67d5706c1b2a9ULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0x2000000000000000ULL, 0x3000000000000000ULL,
        0xb800000000000000ULL, 0x3c00000000000000ULL, 0xde00000000000000ULL, 0xdf00000000000000ULL,
        0x2980000000000000ULL, 0x3240000000000000ULL, 0xe920000000000000ULL, 0x6290000000000000ULL,
        0x71d8000000000000ULL, 0x5e3c000000000000ULL, 0x9f2e000000000000ULL, 0x09e7000000000000ULL,
        0x026b800000000000ULL, 0x5176c00000000000ULL, 0x5ef8200000000000ULL, 0xafac100000000000ULL,
        0x8176080000000000ULL, 0xb69b0c0000000000ULL, 0x3be5ae0000000000ULL, 0xeb41cf0000000000ULL,
        0x33eb978000000000ULL, 0x2f36e7c000000000ULL, 0xf1d8226000000000ULL, 0x1e3c109000000000ULL,
        0xbf2e1c4800000000ULL, 0x39e71ba400000000ULL, 0xba6b85f600000000ULL, 0x6d76ef4f00000000ULL,
        0x80f83a2b80000000ULL, 0x70ac2929c0000000ULL, 0xa8f638b2e0000000ULL, 0x84db0c69b0000000ULL,
        0xd2c59f8008000000ULL, 0x89d1ebc004000000ULL, 0x42338c6002000000ULL, 0x710adf9003000000ULL,
        0x6ef60bc80b800000ULL, 0x17db3c6403c00000ULL, 0xbd4587960de00000ULL, 0x6891efdf0df00000ULL,
        0xe493ae6382980000ULL, 0xc2dafe8dc3240000ULL, 0x018e3344ee920000ULL, 0xc6373c26b6290000ULL,
        0x9313ba2b8f1d8000ULL, 0x6f9ae929c1e3c000ULL, 0xe12e18b2ebf2e000ULL, 0xa6e71c69b39e7000ULL,
        0xb3eb978003a6b800ULL, 0x6f36e7c002d76c00ULL, 0xd1d822600a0f8200ULL, 0x2e3c1090040ac100ULL,
        0x072e1c48010f6080ULL, 0x05e71ba40b8db0c0ULL, 0x646b85f600cc5ae0ULL, 0xb276ef4f056d1cf0ULL,
        0xa9783a2b86bb3978ULL, 0x42ec2929c434ae7cULL, 0x41d638b2e87d6226ULL, 0xe64b0c69b754b109ULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0xa000000000000000ULL, 0xd000000000000000ULL,
        0xf800000000000000ULL, 0x3c00000000000000ULL, 0x6e00000000000000ULL, 0x1900000000000000ULL,
        0x5080000000000000ULL, 0xca40000000000000ULL, 0x7b20000000000000ULL, 0xafd0000000000000ULL,
        0x97a8000000000000ULL, 0x4b9c000000000000ULL, 0x55ae000000000000ULL, 0x64ef000000000000ULL,
        0xf028800000000000ULL, 0x6852400000000000ULL, 0x6408200000000000ULL, 0x820c100000000000ULL,
        0x8f26280000000000ULL, 0x75a3340000000000ULL, 0xf4aebe0000000000ULL, 0xa8614f0000000000ULL,
        0x842ebb8000000000ULL, 0xf221564000000000ULL, 0xa70e9c2000000000ULL, 0xb1f1569000000000ULL,
        0xa6a6a8c800000000ULL, 0xdf6d40f400000000ULL, 0xcd88886a00000000ULL, 0x68c27fa700000000ULL,
        0x16002ccb80000000ULL, 0x650006ebc0000000ULL, 0x9e803b6220000000ULL, 0x03403e3090000000ULL,
        0xd3a0138008000000ULL, 0x5990224004000000ULL, 0x828802200a000000ULL, 0xfd4c09900d000000ULL,
        0x92863b480f800000ULL, 0xe53322b403c00000ULL, 0xdea6aa4a06e00000ULL, 0xa36d663701900000ULL,
        0x0388bf8385080000ULL, 0xa1c2505fcca40000ULL, 0xbe800f2827b20000ULL, 0x934007079afd0000ULL,
        0x8ba03f83817a8000ULL, 0xb590105fc0b9c000ULL, 0x14882f282f5ae000ULL, 0xd84c17079b4ef000ULL,
        0xac06178388828800ULL, 0x3673245fc1452400ULL, 0xf50691282aa08200ULL, 0xc6fd580794b0c100ULL,
        0xef00ac038a7a6280ULL, 0x458e721fcc3e3340ULL, 0x7c860d082418ebe0ULL, 0xbc330e979ceb14f0ULL,
        0x2e2684cb83b06bb8ULL, 0xb92d72ebc0ffd564ULL, 0x80a8a562247809c2ULL, 0x321261309b3ce569ULL,
    },
    {
        0x8000000000000000ULL, 0x4000000000000000ULL, 0x6000000000000000ULL, 0xd000000000000000ULL,
        0xc800000000000000ULL, 0xbc00000000000000ULL, 0x4e00000000000000ULL, 0x5700000000000000ULL,
        0x8080000000000000ULL, 0x0a40000000000000ULL, 0xfd20000000000000ULL, 0x8db0000000000000ULL,
        0xffa8000000000000ULL, 0xa684000000000000ULL, 0x110e000000000000ULL, 0x4bdf000000000000ULL,
        0x74d7800000000000ULL, 0xb872400000000000ULL, 0x8408200000000000ULL, 0x8a74100000000000ULL,
        0xbd06180000000000ULL, 0xedab340000000000ULL, 0x2fd1b20000000000ULL, 0x6ed96f0000000000ULL,
        0xad59b38000000000ULL, 0x05ed45c000000000ULL, 0x23ff982000000000ULL, 0x38b6669000000000ULL,
        0x8e26354800000000ULL, 0x771b286c00000000ULL, 0x30f9866a00000000ULL, 0x121d676100000000ULL,
        0x8977a5e380000000ULL, 0x7f827aa7c0000000ULL, 0xe68029dde0000000ULL, 0x71403e2090000000ULL,
        0x9ba02b8008000000ULL, 0xbcf031c004000000ULL, 0x04080a2006000000ULL, 0xca7419900d000000ULL,
        0xdd061ec80c800000ULL, 0x3dab19ac0bc00000ULL, 0xe7d18c4a04e00000ULL, 0xd2d97ef105700000ULL,
        0xe359bb2b88080000ULL, 0x52ed630bc0a40000ULL, 0xa37fa597efd20000ULL, 0x32f640d198db0000ULL,
        0x730610ab87fa8000ULL, 0xfaab12cbce684000ULL, 0xcf518fb7e710e000ULL, 0xb499494199bdf000ULL,
        0x9879966383cd7800ULL, 0x345d7f67c4472400ULL, 0x925791fdeaa08200ULL, 0xc93248b090d74100ULL,
        0x1fa806c807586180ULL, 0x36842dac01beb340ULL, 0xb90e3e4a0fcf1b20ULL, 0x27df11f1064696f0ULL,
        0xf2d788ab81a71b38ULL, 0x537266cbc152945cULL, 0x4a881db7e81d1982ULL, 0xd73436419a9d9669ULL,
    },
};

} // namespace acfbands::detail

#endif
