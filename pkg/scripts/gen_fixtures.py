#!/usr/bin/env python3
"""Regenerate the bundled fixtures: crash logs, app models, synthetic corpus.

Everything written here is deterministic, so reruns are byte-stable. The
synthetic corpus is built from ten crash families (five Category A, two
Category B, three Category C); clones within a family share the framework
sub-trace and differ only in message details and developer classes, so
each family forms one bucket and nearest-crash retrieval stays inside the
family. Every entry's true location sits at rank 1 of its category's
locator by construction.

Usage: python scripts/gen_fixtures.py [--root DIR]
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from crashloc.corpus import labeled_crash_from_json  # noqa: E402
from crashloc.trace import FrameworkMatcher, parse_and_split  # noqa: E402


def log(exception: str, message: str, frames: list[str]) -> str:
    header = f"{exception}: {message}" if message else exception
    return header + "\n" + "\n".join(f"\tat {f}" for f in frames) + "\n"


# ---------------------------------------------------------------------------
# Category A families: fault is the crash method itself
# ---------------------------------------------------------------------------

def family_a1() -> list[dict]:
    apps = [
        ("com.example.notes", "NoteActivity", "render", "onCreate"),
        ("org.quickmemo.app", "MemoActivity", "showTitle", "onStart"),
        ("io.github.listpad", "PadActivity", "bindHeader", "onResume"),
        ("net.dailyjot.diary", "JotActivity", "refreshLabel", "onCreate"),
    ]
    out = []
    for pkg, cls, crash_m, caller_m in apps:
        frames = [
            "android.widget.TextView.setText(TextView.java:6123)",
            f"{pkg}.{cls}.{crash_m}({cls}.java:88)",
            f"{pkg}.{cls}.{caller_m}({cls}.java:41)",
            "android.app.Activity.performCreate(Activity.java:7136)",
            "android.app.ActivityThread.main(ActivityThread.java:6669)",
        ]
        out.append({
            "crash_log": log(
                "java.lang.NullPointerException",
                "Attempt to invoke virtual method 'void android.widget.TextView"
                ".setText(java.lang.CharSequence)' on a null object reference",
                frames,
            ),
            "category": "A",
            "true_location": f"{pkg}.{cls}#{crash_m}",
            "api_h": None, "sub_category": None, "app_model": None,
        })
    return out


def family_a2() -> list[dict]:
    hashes = ["e7db358", "1a40f2c", "9b07d15", "44c8ea0"]
    out = []
    for h in hashes:
        frames = [
            "androidx.fragment.app.Fragment.startActivityForResult(Fragment.java:925)",
            "org.y20k.transistor.MainActivityFragment.selectFromImagePicker(MainActivityFragment.java:482)",
            "org.y20k.transistor.MainActivityFragment.access$500(MainActivityFragment.java:58)",
            "org.y20k.transistor.MainActivityFragment$6.onReceive(MainActivityFragment.java:415)",
        ]
        out.append({
            "crash_log": log(
                "java.lang.IllegalStateException",
                f"MainActivityFragment{{{h}}} not attached to Activity",
                frames,
            ),
            "category": "A",
            "true_location": "org.y20k.transistor.MainActivityFragment#selectFromImagePicker",
            "api_h": None, "sub_category": None, "app_model": None,
        })
    return out


def family_a3() -> list[dict]:
    apps = [
        ("com.fitlog.tracker", "HistoryActivity", "loadLastEntry", "onResume"),
        ("org.stepcount.walker", "StatsActivity", "readLatestRow", "onStart"),
        ("io.runbook.fit", "SummaryActivity", "fetchRecent", "onCreate"),
        ("net.cycletrack.app", "RideLogActivity", "restoreCursor", "onResume"),
    ]
    out = []
    for i, (pkg, cls, crash_m, caller_m) in enumerate(apps):
        frames = [
            "android.database.AbstractCursor.checkPosition(AbstractCursor.java:464)",
            "android.database.AbstractWindowedCursor.getString(AbstractWindowedCursor.java:50)",
            f"{pkg}.{cls}.{crash_m}({cls}.java:{120 + i})",
            f"{pkg}.{cls}.{caller_m}({cls}.java:{52 + i})",
            "android.app.Activity.performResume(Activity.java:7300)",
        ]
        out.append({
            "crash_log": log(
                "android.database.CursorIndexOutOfBoundsException",
                "Index 0 requested, with a size of 0",
                frames,
            ),
            "category": "A",
            "true_location": f"{pkg}.{cls}#{crash_m}",
            "api_h": None, "sub_category": None, "app_model": None,
        })
    return out


def family_a4() -> list[dict]:
    apps = [
        ("net.pixelforge.collage", "EditorActivity", "exportImage"),
        ("com.snapgrid.photos", "GridActivity", "buildThumbnail"),
        ("org.inkwell.draw", "CanvasActivity", "rasterize"),
        ("io.framefox.studio", "StudioActivity", "cropSelection"),
    ]
    out = []
    for pkg, cls, crash_m in apps:
        frames = [
            "android.graphics.Bitmap.createBitmap(Bitmap.java:1120)",
            f"{pkg}.{cls}.{crash_m}({cls}.java:210)",
            f"{pkg}.{cls}.onOptionsItemSelected({cls}.java:96)",
            "android.app.Activity.onMenuItemSelected(Activity.java:3452)",
        ]
        out.append({
            "crash_log": log(
                "java.lang.IllegalArgumentException",
                "width and height must be > 0",
                frames,
            ),
            "category": "A",
            "true_location": f"{pkg}.{cls}#{crash_m}",
            "api_h": None, "sub_category": None, "app_model": None,
        })
    return out


def family_a5() -> list[dict]:
    apps = [
        ("io.chatlite.app", "MessageStore", "purgeExpired"),
        ("com.pigeonpost.mail", "InboxCache", "evictStale"),
        ("org.swiftping.chat", "RosterStore", "dropOffline"),
        ("net.echoroom.talk", "ThreadCache", "trimHistory"),
    ]
    out = []
    for pkg, cls, crash_m in apps:
        frames = [
            "java.util.ArrayList$Itr.checkForComodification(ArrayList.java:909)",
            "java.util.ArrayList$Itr.next(ArrayList.java:859)",
            f"{pkg}.{cls}.{crash_m}({cls}.java:133)",
            f"{pkg}.SyncService.onStartCommand(SyncService.java:61)",
            "android.app.ActivityThread.handleServiceArgs(ActivityThread.java:3541)",
        ]
        out.append({
            # No message: ConcurrentModificationException is thrown bare.
            "crash_log": log("java.util.ConcurrentModificationException", "", frames),
            "category": "A",
            "true_location": f"{pkg}.{cls}#{crash_m}",
            "api_h": None, "sub_category": None, "app_model": None,
        })
    return out


# ---------------------------------------------------------------------------
# Category B families: fault is outside the trace, in the code
# ---------------------------------------------------------------------------

GEOGRAPHY_API = {
    "class_name": "android.content.ContextWrapper",
    "method_name": "bindService",
    "kind": "call-in",
}

FENGSHUI_API = {
    "class_name": "android.database.sqlite.SQLiteOpenHelper",
    "method_name": "onDowngrade",
    "kind": "callback",
}


def family_b_geography() -> list[dict]:
    hashes = ["29f6021", "7a3b112", "c052f9d", "18de467", "5b91a03", "e6407cc"]
    out = []
    for h in hashes:
        frames = [
            "android.app.LoadedApk.forgetServiceDispatcher(LoadedApk.java:1447)",
            "android.app.ContextImpl.unbindService(ContextImpl.java:1714)",
            "android.content.ContextWrapper.unbindService(ContextWrapper.java:735)",
            "com.yamlearning.geographylearning.MainActivity.onDestroy(MainActivity.java:201)",
            "android.app.Activity.performDestroy(Activity.java:7522)",
        ]
        out.append({
            "crash_log": log(
                "java.lang.IllegalArgumentException",
                f"Service not registered: com.yamlearning.geographylearning.e.a.e@{h}",
                frames,
            ),
            "category": "B",
            "true_location": "com.yamlearning.geographylearning.MainActivity#onCreate",
            "api_h": GEOGRAPHY_API,
            "sub_category": None,
            "app_model": "../app_models/geography.json",
        })
    return out


def family_b_fengshui() -> list[dict]:
    versions = [(19, 17), (21, 18), (20, 17), (23, 19)]
    out = []
    for hi, lo in versions:
        frames = [
            "android.database.sqlite.SQLiteOpenHelper.onDowngrade(SQLiteOpenHelper.java:393)",
            "android.database.sqlite.SQLiteOpenHelper.getDatabaseLocked(SQLiteOpenHelper.java:340)",
            "android.database.sqlite.SQLiteOpenHelper.getWritableDatabase(SQLiteOpenHelper.java:282)",
            "com.divination1518.f.s.a(s.java:54)",
            "com.divination1518.g.p.a(p.java:17)",
            "android.app.ActivityThread.main(ActivityThread.java:6669)",
        ]
        out.append({
            "crash_log": log(
                "android.database.sqlite.SQLiteException",
                f"Can't downgrade database from version {hi} to {lo}",
                frames,
            ),
            "category": "B",
            "true_location": "com.divination1518.g.p#onDowngrade",
            "api_h": FENGSHUI_API,
            "sub_category": None,
            "app_model": "../app_models/fengshui.json",
        })
    return out


# ---------------------------------------------------------------------------
# Category C families: fault is outside the code
# ---------------------------------------------------------------------------

def family_c_manifest() -> list[dict]:
    permissions = [
        "android.permission.CALL_PHONE",
        "android.permission.CAMERA",
        "android.permission.RECORD_AUDIO",
        "android.permission.READ_CONTACTS",
    ]
    out = []
    for perm in permissions:
        frames = [
            "android.os.Parcel.createException(Parcel.java:1966)",
            "android.os.Parcel.readException(Parcel.java:1934)",
            "android.app.Instrumentation.checkStartActivityResult(Instrumentation.java:2018)",
            "com.triptracker.app.TripActivity.dialSupport(TripActivity.java:132)",
            "android.view.View.performClick(View.java:7259)",
        ]
        out.append({
            "crash_log": log(
                "java.lang.SecurityException",
                f"Permission Denial: starting Intent requires {perm}",
                frames,
            ),
            "category": "C",
            "true_location": "Manifest",
            "api_h": None,
            "sub_category": "Manifest",
            "app_model": None,
        })
    return out


def family_c_resource() -> list[dict]:
    ids = ["0x7f0a0042", "0x7f0b0113", "0x7f0800d6"]
    out = []
    for rid in ids:
        frames = [
            "android.content.res.Resources.getText(Resources.java:444)",
            "android.widget.TextView.setText(TextView.java:6412)",
            "org.paperplane.reader.SettingsActivity.onStart(SettingsActivity.java:71)",
            "android.app.Activity.performStart(Activity.java:7355)",
        ]
        out.append({
            "crash_log": log(
                "android.content.res.Resources$NotFoundException",
                f"String resource ID #{rid}",
                frames,
            ),
            "category": "C",
            "true_location": "Resource",
            "api_h": None,
            "sub_category": "Resource",
            "app_model": None,
        })
    return out


def family_c_hardware() -> list[dict]:
    apps = [
        ("com.lensbox.scanner", "ScanActivity"),
        ("org.barwise.qr", "CaptureActivity"),
        ("io.snapdoc.scan", "DocScanActivity"),
    ]
    out = []
    for pkg, cls in apps:
        frames = [
            "android.hardware.Camera.native_setup(Native Method)",
            "android.hardware.Camera.<init>(Camera.java:547)",
            "android.hardware.Camera.open(Camera.java:403)",
            f"{pkg}.{cls}.initCamera({cls}.java:91)",
            f"{pkg}.{cls}.onResume({cls}.java:58)",
            "android.app.Activity.performResume(Activity.java:7300)",
        ]
        out.append({
            "crash_log": log(
                "java.lang.RuntimeException",
                "Fail to connect to camera service",
                frames,
            ),
            "category": "C",
            "true_location": "Hardware",
            "api_h": None,
            "sub_category": "Hardware",
            "app_model": None,
        })
    return out


# ---------------------------------------------------------------------------
# App models
# ---------------------------------------------------------------------------

GEOGRAPHY_MODEL = {
    "classes": [
        {
            "name": "com.yamlearning.geographylearning.MainActivity",
            "superclasses": [
                "android.app.Activity",
                "android.view.ContextThemeWrapper",
                "android.content.ContextWrapper",
                "android.content.Context",
                "java.lang.Object",
            ],
            "active_methods": [
                "com.yamlearning.geographylearning.MainActivity#onCreate(android.os.Bundle)",
            ],
            "non_overridden_callbacks": [],
        },
        {
            "name": "com.yamlearning.geographylearning.QuizService",
            "superclasses": [
                "android.app.Service",
                "android.content.ContextWrapper",
                "android.content.Context",
                "java.lang.Object",
            ],
            "active_methods": [
                "com.yamlearning.geographylearning.QuizService#onBind(android.content.Intent)",
            ],
            "non_overridden_callbacks": [],
        },
    ],
    "invocations": [
        {
            "caller": "com.yamlearning.geographylearning.MainActivity#onCreate(android.os.Bundle)",
            "callees": [
                "android.content.ContextWrapper#bindService(android.content.Intent,android.content.ServiceConnection,int)",
            ],
        },
    ],
    "param_flows": [
        {
            "callee": "com.yamlearning.geographylearning.QuizService#onBind(android.content.Intent)",
            "position": 0,
            "class_name": "android.content.Intent",
        },
    ],
    "apis": [
        {"class_name": "android.content.ContextWrapper", "method_name": "bindService", "kind": "call-in"},
        {"class_name": "android.content.ContextWrapper", "method_name": "unbindService", "kind": "call-in"},
    ],
}

FENGSHUI_MODEL = {
    "classes": [
        {
            "name": "com.divination1518.f.s",
            "superclasses": ["java.lang.Object"],
            "active_methods": ["com.divination1518.f.s#a()"],
            "non_overridden_callbacks": [],
        },
        {
            "name": "com.divination1518.g.p",
            "superclasses": ["android.database.sqlite.SQLiteOpenHelper", "java.lang.Object"],
            "active_methods": [
                "com.divination1518.g.p#a()",
                "com.divination1518.g.p#onCreate(android.database.sqlite.SQLiteDatabase)",
                "com.divination1518.g.p#onUpgrade(android.database.sqlite.SQLiteDatabase,int,int)",
            ],
            "non_overridden_callbacks": [
                "android.database.sqlite.SQLiteOpenHelper#onDowngrade(android.database.sqlite.SQLiteDatabase,int,int)",
                "android.database.sqlite.SQLiteOpenHelper#onOpen(android.database.sqlite.SQLiteDatabase)",
            ],
        },
    ],
    "invocations": [
        {"caller": "com.divination1518.g.p#a()", "callees": ["com.divination1518.f.s#a()"]},
        {
            "caller": "com.divination1518.f.s#a()",
            "callees": ["android.database.sqlite.SQLiteOpenHelper#getWritableDatabase()"],
        },
    ],
    "param_flows": [],
    "apis": [
        {"class_name": "android.database.sqlite.SQLiteOpenHelper", "method_name": "getWritableDatabase", "kind": "call-in"},
        {"class_name": "android.database.sqlite.SQLiteOpenHelper", "method_name": "onDowngrade", "kind": "callback"},
        {"class_name": "android.database.sqlite.SQLiteOpenHelper", "method_name": "onOpen", "kind": "callback"},
    ],
}


# ---------------------------------------------------------------------------
# Standalone parser fixtures (shapes beyond the corpus families)
# ---------------------------------------------------------------------------

def parser_fixtures(corpus: list[dict]) -> dict[str, str]:
    listing1 = log(
        "java.lang.IllegalStateException",
        "MainActivityFragment{e7db358} not attached to Activity",
        [
            "androidx.fragment.Fragment.startActivityForResult(Fragment.java:925)",
            "app.MainActivityFragment.selectFromImagePicker(MainActivityFragment.java:482)",
            "app.MainActivityFragment.access$500(MainActivityFragment.java:58)",
            "app.MainActivityFragment$6.onReceive(MainActivityFragment.java:415)",
        ],
    )
    figure1 = log(
        "java.lang.IllegalArgumentException",
        "recursive entry to executePendingTransactions",
        [
            "android.app.FragmentManagerImpl.checkStateLoss(FragmentManager.java:1333)",
            "android.app.FragmentManagerImpl.execPendingActions(FragmentManager.java:1647)",
            "android.app.FragmentManagerImpl.executePendingTransactions(FragmentManager.java:573)",
            "de.sailerslog.app.LogbookFragment.commitPendingEntries(LogbookFragment.java:204)",
            "de.sailerslog.app.LogbookFragment$Refresher.onReceive(LogbookFragment.java:412)",
            "android.app.LoadedApk$ReceiverDispatcher$Args.run(LoadedApk.java:1169)",
            "android.os.Handler.handleCallback(Handler.java:751)",
        ],
    )
    caused_by = (
        log(
            "java.lang.RuntimeException",
            "Unable to start activity ComponentInfo{com.example.notes/"
            "com.example.notes.NoteActivity}: java.lang.NullPointerException",
            [
                "android.app.ActivityThread.performLaunchActivity(ActivityThread.java:2817)",
                "android.app.ActivityThread.handleLaunchActivity(ActivityThread.java:2892)",
                "com.example.notes.NoteActivity.onCreate(NoteActivity.java:41)",
            ],
        )
        + "Caused by: java.lang.NullPointerException\n"
        + "\tat com.example.notes.NoteStore.load(NoteStore.java:77)\n"
        + "\tat android.app.Activity.performCreate(Activity.java:6912)\n"
    )
    no_message = log(
        "android.os.DeadObjectException",
        "",
        [
            "android.os.BinderProxy.transactNative(Native Method)",
            "android.os.BinderProxy.transact(Binder.java:1145)",
            "com.swiftmail.app.SyncAdapter.onPerformSync(SyncAdapter.java:88)",
        ],
    )
    dev_topmost = log(
        "java.lang.UnsatisfiedLinkError",
        "No implementation found for long com.imagekit.native.Blur.process(long)",
        [
            "com.imagekit.jni.NativeBlur.process(Native Method)",
            "com.imagekit.jni.NativeBlur.apply(NativeBlur.java:31)",
            "android.os.AsyncTask$2.call(AsyncTask.java:333)",
        ],
    )
    unknown_source = log(
        "java.lang.IllegalStateException",
        "Fragment already added: TimerFragment{3ba9c41}",
        [
            "androidx.fragment.app.FragmentStore.addFragment(FragmentStore.java:142)",
            "androidx.fragment.app.FragmentManager.addFragment(FragmentManager.java:1562)",
            "org.tickclock.timer.TimerHostActivity.showTimer(Unknown Source)",
            "org.tickclock.timer.TimerHostActivity.onStart(TimerHostActivity.java:58)",
        ],
    )
    init_ctor = log(
        "java.lang.UnsupportedOperationException",
        "Failed to resolve attribute at index 6",
        [
            "android.content.res.TypedArray.getDimensionPixelSize(TypedArray.java:762)",
            "android.view.View.<init>(View.java:3756)",
            "com.glowpad.widgets.DialView.<init>(DialView.java:33)",
            "com.glowpad.widgets.PanelHost.buildDial(PanelHost.java:88)",
        ],
    )
    long_trace = log(
        "java.lang.IllegalStateException",
        "Cannot call this method while RecyclerView is computing a layout or scrolling",
        [
            "androidx.recyclerview.widget.RecyclerView.assertNotInLayoutOrScroll(RecyclerView.java:3217)",
            "androidx.recyclerview.widget.RecyclerView$RecyclerViewDataObserver.onItemRangeChanged(RecyclerView.java:5699)",
            "androidx.recyclerview.widget.RecyclerView$AdapterDataObservable.notifyItemRangeChanged(RecyclerView.java:12887)",
            "androidx.recyclerview.widget.RecyclerView$Adapter.notifyItemChanged(RecyclerView.java:7523)",
            "com.inboxzero.mail.ThreadListFragment.markRead(ThreadListFragment.java:301)",
            "com.inboxzero.mail.ThreadListFragment.access$200(ThreadListFragment.java:64)",
            "com.inboxzero.mail.ThreadListFragment$SwipeHandler.onSwiped(ThreadListFragment.java:512)",
            "androidx.recyclerview.widget.ItemTouchHelper.postDispatchSwipe(ItemTouchHelper.java:695)",
            "androidx.recyclerview.widget.ItemTouchHelper$4.run(ItemTouchHelper.java:681)",
            "android.os.Handler.handleCallback(Handler.java:751)",
            "android.os.Handler.dispatchMessage(Handler.java:95)",
            "android.os.Looper.loop(Looper.java:154)",
            "android.app.ActivityThread.main(ActivityThread.java:6682)",
            "java.lang.reflect.Method.invoke(Native Method)",
        ],
    )
    kotlin_frames = log(
        "kotlinx.coroutines.JobCancellationException",
        "Job was cancelled",
        [
            "kotlinx.coroutines.JobSupport.cancel(JobSupport.kt:1579)",
            "kotlin.coroutines.jvm.internal.BaseContinuationImpl.resumeWith(ContinuationImpl.kt:33)",
            "dev.norrwind.radio.PlayerViewModel$fetchStations$1.invokeSuspend(PlayerViewModel.kt:52)",
            "kotlinx.coroutines.DispatchedTask.run(DispatchedTask.kt:106)",
        ],
    )
    nested_inner = log(
        "java.lang.NullPointerException",
        "Attempt to read from field 'int android.view.ViewGroup$LayoutParams.width' "
        "on a null object reference",
        [
            "android.view.ViewGroup$MarginLayoutParams.<init>(ViewGroup.java:7679)",
            "android.widget.FrameLayout$LayoutParams.<init>(FrameLayout.java:736)",
            "com.pocketlist.app.BoardView$ItemHolder$1.onLayout(BoardView.java:218)",
            "com.pocketlist.app.BoardView$ItemHolder.bind(BoardView.java:165)",
        ],
    )
    return {
        "listing1.log": listing1,
        "figure1.log": figure1,
        "caused_by.log": caused_by,
        "no_message.log": no_message,
        "dev_topmost.log": dev_topmost,
        "unknown_source.log": unknown_source,
        "init_ctor.log": init_ctor,
        "long_trace.log": long_trace,
        "kotlin_frames.log": kotlin_frames,
        "nested_inner.log": nested_inner,
        "a1_notes_npe.log": corpus[0]["crash_log"],
        "a2_transistor_state.log": corpus[4]["crash_log"],
        "a3_cursor_index.log": corpus[8]["crash_log"],
        "a4_bitmap_size.log": corpus[12]["crash_log"],
        "a5_concurrent_mod.log": corpus[16]["crash_log"],
        "b_geography_service.log": corpus[20]["crash_log"],
        "b_fengshui_downgrade.log": corpus[26]["crash_log"],
        "c_manifest_permission.log": corpus[30]["crash_log"],
        "c_resource_missing.log": corpus[34]["crash_log"],
        "c_hardware_camera.log": corpus[37]["crash_log"],
    }


def build_corpus() -> list[dict]:
    corpus: list[dict] = []
    corpus.extend(family_a1())        # 0-3
    corpus.extend(family_a2())        # 4-7
    corpus.extend(family_a3())        # 8-11
    corpus.extend(family_a4())        # 12-15
    corpus.extend(family_a5())        # 16-19
    corpus.extend(family_b_geography())  # 20-25
    corpus.extend(family_b_fengshui())   # 26-29
    corpus.extend(family_c_manifest())   # 30-33
    corpus.extend(family_c_resource())   # 34-36
    corpus.extend(family_c_hardware())   # 37-39
    return corpus


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--root", default=str(Path(__file__).resolve().parents[1]),
                        help="repository root to write fixtures under")
    args = parser.parse_args()
    root = Path(args.root)
    fixtures = root / "fixtures"
    (fixtures / "crashes").mkdir(parents=True, exist_ok=True)
    (fixtures / "app_models").mkdir(parents=True, exist_ok=True)
    (fixtures / "corpus").mkdir(parents=True, exist_ok=True)

    corpus = build_corpus()
    matcher = FrameworkMatcher()

    # Sanity: every corpus entry must parse, split, and validate.
    for i, entry in enumerate(corpus):
        labeled_crash_from_json(entry, matcher, fixtures / "corpus", f"/{i}")

    corpus_path = fixtures / "corpus" / "synthetic_corpus.jsonl"
    corpus_path.write_text(
        "\n".join(json.dumps(entry, ensure_ascii=False) for entry in corpus) + "\n",
        encoding="utf-8",
    )
    print(f"wrote {corpus_path} ({len(corpus)} crashes)")

    for name, model in (("geography.json", GEOGRAPHY_MODEL), ("fengshui.json", FENGSHUI_MODEL)):
        path = fixtures / "app_models" / name
        path.write_text(json.dumps(model, indent=2) + "\n", encoding="utf-8")
        print(f"wrote {path}")

    logs = parser_fixtures(corpus)
    for name, text in logs.items():
        parse_and_split(text, matcher)  # sanity: every fixture splits
        (fixtures / "crashes" / name).write_text(text, encoding="utf-8")
    print(f"wrote {len(logs)} crash logs under {fixtures / 'crashes'}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
