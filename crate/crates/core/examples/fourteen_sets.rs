//! Prints the fourteen distinct images of one subset of the real line under
//! words in closure, interior and complement.

use kuratowski::realline::eval_word_real;
use kuratowski::rewrite::closure_complement_forms;
use kuratowski::make_set;

fn main() {
    let a = make_set("(0,1)+(1,2)+{3}+[4,5]Q").expect("valid literal");
    println!("A = {a}");
    for w in closure_complement_forms() {
        println!("{:>10}  {}", w.to_string(), eval_word_real(&w, &a));
    }
}
