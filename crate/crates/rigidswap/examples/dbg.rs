use rigidswap::config::*;
use rigidswap::poly::tower;
fn main() {
    let bhp = tower(4, 3);
    let mut pts: Vec<HomPoint> = (0..7).map(|i| affine_i(i, i * i, 1)).collect();
    pts[4] = affine_i(0, 0, 0);
    pts[5] = affine_i(1, 1, 1);
    pts[6] = affine_i(2, 2, 2);
    let config = Configuration::new(pts);
    println!("{:?}", config.check_block_hole_general_position(&bhp));
    println!("block face: {:?}", bhp.poly().face(0));
    println!("hole face: {:?}", bhp.poly().face(1));
}
