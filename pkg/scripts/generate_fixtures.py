"""One-shot generator for the curated fixture corpus under tests/fixtures.

Writes each fixture tree, then analyzes it and prints the per-category
violation counts so expected values can be frozen into the tests.
"""

import os
import shutil
import sys

PKG_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.path.join(PKG_ROOT, "src"))

from javastyle.analysis import analyze_repository  # noqa: E402

ROOT = os.path.join(PKG_ROOT, "tests", "fixtures")

CLEAN = {
    "ClassNames": {
        "p/Names.java": """package p;

public class DataManager {
  private int total;

  int getTotal() { return total; }
}

enum Status { READY, DONE }
""",
    },
    "MethodNames": {
        "p/Actions.java": """package p;

class Actions {
  Actions() {}

  void sortItems() {}

  int getValue() { return 1; }

  boolean isReady() { return true; }

  void doWork() {}
}
""",
    },
    "VariableNames": {
        "p/Holder.java": """package p;

class Holder {
  static final int MAX_SIZE = 64;

  private int count;

  int add(int fooBar) {
    int total = count + fooBar;
    return total;
  }
}
""",
    },
    "PackageNames": {
        "p/Place.java": """package p;

class Place {
  private int spot;

  int getSpot() { return spot; }
}
""",
    },
    "JavadocClass": {
        "p/Documented.java": """package p;

/** Coordinates scheduled cleanup passes across every registered cache region nightly. */
public class Documented {
  void tick() {}
}

class Quiet {
  void rest() {}
}
""",
    },
    "JavadocMethod": {
        "p/Api.java": """package p;

class Api {
  /**
   * Runs one maintenance pass and reports whether any work happened.
   * @return true when at least one entry was touched
   */
  public boolean runPass() { return false; }

  void helper() {}
}
""",
    },
    "JavadocConstructor": {
        "p/Builder.java": """package p;

class Builder {
  /** Creates a builder preloaded with the default widget assembly settings. */
  public Builder() {}

  Builder(int seed) {}
}
""",
    },
    "JavadocField": {
        "p/Constants.java": """package p;

class Constants {
  /** Upper bound. */
  public static final int LIMIT = 10;

  private int hidden;

  int getHidden() { return hidden; }
}
""",
    },
    "JavadocFormatting": {
        "p/WellFormed.java": """package p;

class WellFormed {
  /**
   * Copies size bytes from the source buffer into the destination.
   * @param size the number of bytes to copy
   * @return the count actually copied
   * @throws IOException when the destination rejects the write
   */
  int copy(int size) throws IOException { return size; }
}
""",
    },
    "PrivateInstances": {
        "p/Encapsulated.java": """package p;

class Encapsulated {
  public static int counter;

  private int first;

  protected int second;

  int sum() { return first + second; }
}
""",
    },
    "Useless": {
        "p/Tidy.java": """package p;

import java.util.List;

class Tidy {
  private int used;

  // explains the retry strategy in plain prose
  int bump(List items) {
    int next = used + items.size();
    used = next;
    return next;
  }
}
""",
    },
    "StringConcatenation": {
        "p/Efficient.java": """package p;

class Efficient {
  String join(int n) {
    StringBuilder sb = new StringBuilder();
    for (int i = 0; i < n; i++) {
      sb.append(i).append(' ');
    }
    return sb.toString();
  }
}
""",
    },
    "FinalizeOverride": {
        "p/Lifecycle.java": """package p;

class Lifecycle {
  void finalize(int mode) {}

  void cleanup() {}
}
""",
    },
    "UnqualifiedStaticAccess": {
        "p/Utils.java": """package p;

public class Utils {
  public static final int LIMIT = 9;

  public static void doWork() {}
}
""",
        "p/Caller.java": """package p;

class Caller {
  void run() {
    Utils.doWork();
    int n = Utils.LIMIT;
    use(n);
  }

  void use(int n) {}
}
""",
    },
    "EmptyCatchBlock": {
        "p/Careful.java": """package p;

class Careful {
  void parse() {
    try {
      ping();
    } catch (RuntimeException e) {
      // malformed input is expected here; fall through to the default
    }
    try {
      ping();
    } catch (RuntimeException e) {
      recover();
    }
  }

  void ping() {}

  void recover() {}
}
""",
        "p/CarefulTest.java": """package p;

class CarefulTest {
  void testParse() {
    try {
      ping();
    } catch (RuntimeException expected) {}
  }

  void ping() {}
}
""",
    },
    "MissingOverride": {
        "p/Base.java": """package p;

public class Base {
  public void work() {}
}
""",
        "p/Child.java": """package p;

public class Child extends Base {
  @Override
  public void work() {}

  @Override
  public String toString() { return "child"; }
}
""",
    },
    "Ordering": {
        "p/Arranged.java": """package p;

class Arranged {
  static int counter;

  static void reset() { counter = 0; }

  private int value;

  Arranged(int value) { this.value = value; }

  int getValue() { return value; }

  class Inner {}
}
""",
    },
}

SEEDED = {
    "ClassNames": (3, {
        "p/BadNames.java": """package p;

class dataManager {
  void noop() {}
}

class RunFast {
  void noop() {}
}

enum badColor { RED }
""",
    }),
    "MethodNames": (3, {
        "p/Motions.java": """package p;

class Motions {
  void DoWork() {}

  void fastSort() {}

  void speedily() {}
}
""",
    }),
    "VariableNames": (4, {
        "p/Slots.java": """package p;

class Slots {
  static final int maxSize = 2;

  int Count;

  void fill(int FooBar) {
    int x_y = FooBar;
    Count = x_y;
  }
}
""",
    }),
    "PackageNames": (2, {
        "p/Wrong.java": """package q.other;

class Wrong {
  void noop() {}
}
""",
        "Bad/Case/Thing.java": """package Bad.Case;

class Thing {
  void noop() {}
}
""",
    }),
    "JavadocClass": (2, {
        "p/Undocumented.java": """package p;

public class Undocumented {
  void noop() {}
}
""",
        "p/Terse.java": """package p;

/** Too short to count. */
public class Terse {
  void noop() {}
}
""",
    }),
    "JavadocMethod": (2, {
        "p/Surface.java": """package p;

class Surface {
  public void first() {}

  public int second() { return 2; }

  void helper() {}
}
""",
    }),
    "JavadocConstructor": (1, {
        "p/Spawned.java": """package p;

class Spawned {
  public Spawned() {}

  Spawned(int seed) {}
}
""",
    }),
    "JavadocField": (2, {
        "p/Exposed.java": """package p;

class Exposed {
  public int first;

  public int second;

  private int hidden;

  int peek() { return hidden + first + second; }
}
""",
    }),
    "JavadocFormatting": (3, {
        "p/Sloppy.java": """package p;

class Sloppy {
  /**
   * Copies one entry from the cache into the given buffer.
   */
  void copy(int size) {}

  /**
   * Runs one pass over the queue draining completed work items.
   * @return the drained count
   */
  void drain() {}

  /**
   * Computes the next backoff delay for the retry scheduler loop.
   * @param attempt
   */
  void backoff(int attempt) {}
}
""",
    }),
    "PrivateInstances": (2, {
        "p/Leaky.java": """package p;

class Leaky {
  public int first;

  int second;

  protected int third;

  private int fourth;

  int sum() { return first + second + third + fourth; }
}
""",
    }),
    "Useless": (6, {
        "p/Cluttered.java": """package p;

import java.util.List;
import java.util.Map;

class Cluttered {
  private int ghost;

  private int real;

  private void orphan() {}

  int work(List items) {
    int dead = 3;
    // int oldTotal = real;
    // recompute(oldTotal);
    real = items.size();
    return real;
  }
}
""",
    }),
    "StringConcatenation": (2, {
        "p/Sluggish.java": """package p;

class Sluggish {
  String slow(int n) {
    String result = "";
    for (int i = 0; i < n; i++) {
      result += i + " ";
    }
    return result;
  }

  String also(String acc) {
    while (acc.length() < 10) {
      acc = acc + "x";
    }
    return acc;
  }
}
""",
    }),
    "FinalizeOverride": (2, {
        "p/Doomed.java": """package p;

class First {
  protected void finalize() {}
}

class Second {
  static void finalize() {}
}
""",
    }),
    "UnqualifiedStaticAccess": (3, {
        "p/Utils.java": """package p;

public class Utils {
  public static final int LIMIT = 9;

  public static void doWork() {}
}
""",
        "p/Sloppy.java": """package p;

class Sloppy {
  Utils utilInstance = new Utils();

  Utils getUtils() { return utilInstance; }

  void run() {
    utilInstance.doWork();
    int n = utilInstance.LIMIT;
    getUtils().doWork();
    use(n);
  }

  void use(int n) {}
}
""",
    }),
    "EmptyCatchBlock": (2, {
        "p/Swallower.java": """package p;

class Swallower {
  void eat() {
    try {
      ping();
    } catch (RuntimeException e) {}
    try {
      ping();
    } catch (Exception e) {}
  }

  void ping() {}
}
""",
    }),
    "MissingOverride": (2, {
        "p/Base.java": """package p;

public class Base {
  public void work() {}
}
""",
        "p/Child.java": """package p;

public class Child extends Base {
  public void work() {}

  public String toString() { return "child"; }
}
""",
    }),
    "Ordering": (2, {
        "p/Disarranged.java": """package p;

class Disarranged {
  private int value;

  static int counter;

  static int limit;

  int getValue() { return value + counter + limit; }
}
""",
    }),
}


def write_tree(base, files):
    for rel, text in files.items():
        full = os.path.join(base, rel)
        os.makedirs(os.path.dirname(full), exist_ok=True)
        with open(full, "w", encoding="utf-8") as fh:
            fh.write(text)


def main():
    if os.path.isdir(ROOT):
        shutil.rmtree(ROOT)
    problems = []
    for name, files in CLEAN.items():
        base = os.path.join(ROOT, "clean", name)
        write_tree(base, files)
        result = analyze_repository(base)
        own = sum(1 for v in result.violations if v.category.value == name)
        marker = "" if own == 0 else "  <-- EXPECTED 0"
        if own != 0:
            problems.append(f"clean/{name}")
        others = sorted({v.category.value for v in result.violations})
        print(f"clean/{name}: own={own}{marker} others={others}")
    print()
    for name, (expected, files) in SEEDED.items():
        base = os.path.join(ROOT, "seeded", name)
        write_tree(base, files)
        result = analyze_repository(base)
        own = sum(1 for v in result.violations if v.category.value == name)
        marker = "" if own == expected else f"  <-- EXPECTED {expected}"
        if own != expected:
            problems.append(f"seeded/{name}")
        print(f"seeded/{name}: own={own}{marker}")
    print()
    print("PROBLEMS:", problems or "none")


if __name__ == "__main__":
    main()
